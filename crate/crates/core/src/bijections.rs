//! The explicit bijections behind the Fibonacci recurrences for restricted
//! compositions, with inverses and an exhaustive verifier.
//!
//! Each map sends a tagged disjoint union of two source sets onto one target
//! set, and the last part of an image always tells which source it came from:
//!
//! | map   | target           | origins                                        |
//! |-------|------------------|------------------------------------------------|
//! | prop1 | parts12(n)       | parts12(n-1) append 1, parts12(n-2) append 2   |
//! | prop2 | odd(n)           | odd(n-1) append 1, odd(n-2) last part += 2     |
//! | prop3 | min2(n)          | min2(n-1) last part += 1, min2(n-2) append 2   |
//! | thm4  | parts12(n)       | min2(n) via conjugation, odd(n) via expansion  |

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::codec::conjugate;
use crate::composition::{ClassSpec, Composition};
use crate::enumerate::enumerate;
use crate::error::{Error, ParseError, Result};

/// Which half of the disjoint union a source composition belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Origin {
    FromNMinus1,
    FromNMinus2,
    FromMin2,
    FromOdd,
}

impl Origin {
    pub fn name(self) -> &'static str {
        match self {
            Origin::FromNMinus1 => "from-n-minus-1",
            Origin::FromNMinus2 => "from-n-minus-2",
            Origin::FromMin2 => "from-min2",
            Origin::FromOdd => "from-odd",
        }
    }
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Origin {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "from-n-minus-1" => Ok(Origin::FromNMinus1),
            "from-n-minus-2" => Ok(Origin::FromNMinus2),
            "from-min2" => Ok(Origin::FromMin2),
            "from-odd" => Ok(Origin::FromOdd),
            _ => Err(ParseError::UnknownOrigin(s.to_string())),
        }
    }
}

/// An element of the disjoint-union domain. The tag is needed because a
/// composition such as `(5)` lies in both thm4 sources.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TaggedSource {
    pub origin: Origin,
    pub payload: Composition,
}

impl TaggedSource {
    pub fn new(origin: Origin, payload: Composition) -> Self {
        Self { origin, payload }
    }
}

impl fmt::Display for TaggedSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.origin, self.payload)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BijectionMap {
    Prop1,
    Prop2,
    Prop3,
    Thm4,
}

impl BijectionMap {
    pub const ALL_MAPS: [BijectionMap; 4] = [
        BijectionMap::Prop1,
        BijectionMap::Prop2,
        BijectionMap::Prop3,
        BijectionMap::Thm4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BijectionMap::Prop1 => "prop1",
            BijectionMap::Prop2 => "prop2",
            BijectionMap::Prop3 => "prop3",
            BijectionMap::Thm4 => "thm4",
        }
    }

    /// Smallest `n` the construction is valid for.
    pub fn min_n(self) -> u32 {
        match self {
            BijectionMap::Prop1 | BijectionMap::Prop2 => 3,
            BijectionMap::Prop3 => 4,
            BijectionMap::Thm4 => 2,
        }
    }

    pub fn target_class(self) -> ClassSpec {
        match self {
            BijectionMap::Prop1 | BijectionMap::Thm4 => ClassSpec::Parts12,
            BijectionMap::Prop2 => ClassSpec::Odd,
            BijectionMap::Prop3 => ClassSpec::Min2,
        }
    }

    /// The two origins, in the order the domain is listed.
    pub fn origins(self) -> [Origin; 2] {
        match self {
            BijectionMap::Thm4 => [Origin::FromMin2, Origin::FromOdd],
            _ => [Origin::FromNMinus2, Origin::FromNMinus1],
        }
    }

    /// Class and total of the source set for `origin` at target size `n`.
    pub fn source(self, origin: Origin, n: u32) -> Result<(ClassSpec, u32)> {
        self.check_range(n)?;
        match (self, origin) {
            (BijectionMap::Thm4, Origin::FromMin2) => Ok((ClassSpec::Min2, n)),
            (BijectionMap::Thm4, Origin::FromOdd) => Ok((ClassSpec::Odd, n)),
            (BijectionMap::Thm4, _) | (_, Origin::FromMin2 | Origin::FromOdd) => {
                Err(Error::WrongOrigin {
                    map: self.name(),
                    origin: origin.name(),
                })
            }
            (_, Origin::FromNMinus1) => Ok((self.target_class(), n - 1)),
            (_, Origin::FromNMinus2) => Ok((self.target_class(), n - 2)),
        }
    }

    /// Origin implied by the last part of a target composition.
    pub fn discriminate(self, c: &Composition) -> Option<Origin> {
        let last = c.last()?;
        match self {
            BijectionMap::Prop1 => match last {
                1 => Some(Origin::FromNMinus1),
                2 => Some(Origin::FromNMinus2),
                _ => None,
            },
            BijectionMap::Prop2 => match last {
                1 => Some(Origin::FromNMinus1),
                k if k >= 3 => Some(Origin::FromNMinus2),
                _ => None,
            },
            BijectionMap::Prop3 => match last {
                2 => Some(Origin::FromNMinus2),
                k if k >= 3 => Some(Origin::FromNMinus1),
                _ => None,
            },
            BijectionMap::Thm4 => match last {
                1 => Some(Origin::FromOdd),
                2 => Some(Origin::FromMin2),
                _ => None,
            },
        }
    }

    fn check_range(self, n: u32) -> Result<()> {
        if n < self.min_n() {
            return Err(Error::BelowRange {
                map: self.name(),
                n,
                min: self.min_n(),
            });
        }
        Ok(())
    }

    pub fn forward(self, src: &TaggedSource, n: u32) -> Result<Composition> {
        self.check_range(n)?;
        let (class, total) = self.source(src.origin, n)?;
        if !class.contains(&src.payload) || src.payload.total() != total {
            return Err(Error::BadPayload {
                map: self.name(),
                class,
                composition: src.payload.to_string(),
                expected_total: total,
            });
        }
        let mut parts = src.payload.parts().to_vec();
        match (self, src.origin) {
            (BijectionMap::Prop1, Origin::FromNMinus2) => parts.push(2),
            (BijectionMap::Prop1 | BijectionMap::Prop2, Origin::FromNMinus1) => parts.push(1),
            (BijectionMap::Prop2, Origin::FromNMinus2) => grow_last(&mut parts, 2),
            (BijectionMap::Prop3, Origin::FromNMinus2) => parts.push(2),
            (BijectionMap::Prop3, Origin::FromNMinus1) => grow_last(&mut parts, 1),
            (BijectionMap::Thm4, Origin::FromMin2) => return thm4_from_min2(&src.payload),
            (BijectionMap::Thm4, Origin::FromOdd) => return Ok(expand_odd_parts(&src.payload)),
            _ => unreachable!("source() rejects mismatched origins"),
        }
        Ok(Composition::from_parts_unchecked(parts))
    }

    pub fn backward(self, c: &Composition, n: u32) -> Result<TaggedSource> {
        self.check_range(n)?;
        let class = self.target_class();
        if !class.contains(c) || c.total() != n {
            return Err(Error::BadPayload {
                map: self.name(),
                class,
                composition: c.to_string(),
                expected_total: n,
            });
        }
        let origin = self
            .discriminate(c)
            .expect("every target composition has a discriminating last part");
        let mut parts = c.parts().to_vec();
        let payload = match (self, origin) {
            (BijectionMap::Prop1 | BijectionMap::Prop2, Origin::FromNMinus1)
            | (BijectionMap::Prop1 | BijectionMap::Prop3, Origin::FromNMinus2) => {
                parts.pop();
                Composition::from_parts_unchecked(parts)
            }
            (BijectionMap::Prop2, Origin::FromNMinus2) => {
                grow_last(&mut parts, -2);
                Composition::from_parts_unchecked(parts)
            }
            (BijectionMap::Prop3, Origin::FromNMinus1) => {
                grow_last(&mut parts, -1);
                Composition::from_parts_unchecked(parts)
            }
            (BijectionMap::Thm4, Origin::FromMin2) => thm4_to_min2(c)?,
            (BijectionMap::Thm4, Origin::FromOdd) => collapse_runs(c),
            _ => unreachable!("discriminate() only returns this map's origins"),
        };
        Ok(TaggedSource { origin, payload })
    }
}

impl fmt::Display for BijectionMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BijectionMap {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        BijectionMap::ALL_MAPS
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| ParseError::UnknownMap(s.to_string()))
    }
}

fn grow_last(parts: &mut [u32], delta: i64) {
    let last = parts
        .last_mut()
        .expect("payload is nonempty for n in range");
    *last = (i64::from(*last) + delta) as u32;
}

/// Conjugate, strip the outer 1s, append a 2.
fn thm4_from_min2(c: &Composition) -> Result<Composition> {
    let conj = conjugate(c)?;
    let parts = conj.parts();
    let shaped = parts.len() >= 2
        && parts[0] == 1
        && parts[parts.len() - 1] == 1
        && parts.iter().all(|&p| p <= 2);
    if !shaped {
        return Err(Error::Invariant {
            map: "thm4",
            detail: format!("conjugate {conj} of {c} is not a parts-1-2 composition with outer 1s"),
        });
    }
    let mut out = parts[1..parts.len() - 1].to_vec();
    out.push(2);
    Ok(Composition::from_parts_unchecked(out))
}

/// Drop the final 2, wrap in 1s, conjugate.
fn thm4_to_min2(c: &Composition) -> Result<Composition> {
    let parts = c.parts();
    let mut wrapped = Vec::with_capacity(parts.len() + 1);
    wrapped.push(1);
    wrapped.extend_from_slice(&parts[..parts.len() - 1]);
    wrapped.push(1);
    conjugate(&Composition::from_parts_unchecked(wrapped))
}

/// Each odd part `2k + 1` becomes `k` twos followed by a 1.
fn expand_odd_parts(c: &Composition) -> Composition {
    let mut out = Vec::with_capacity(c.total() as usize);
    for &part in c.parts() {
        out.extend(std::iter::repeat_n(2, (part / 2) as usize));
        out.push(1);
    }
    Composition::from_parts_unchecked(out)
}

/// Each run of `k` twos followed by a 1 becomes `2k + 1`.
fn collapse_runs(c: &Composition) -> Composition {
    let mut out = Vec::new();
    let mut run = 0;
    for &part in c.parts() {
        run += part;
        if part == 1 {
            out.push(run);
            run = 0;
        }
    }
    debug_assert_eq!(run, 0, "input ends in 1");
    Composition::from_parts_unchecked(out)
}

/// Materialization limit for [`verify_bijection`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub bound: u32,
}

impl VerifyConfig {
    pub const DEFAULT_BOUND: u32 = 20;
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            bound: Self::DEFAULT_BOUND,
        }
    }
}

/// A concrete counterexample found by [`verify_bijection`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    ForwardFailed {
        source: TaggedSource,
        error: Error,
    },
    OutsideTarget {
        source: TaggedSource,
        image: Composition,
    },
    WrongDiscriminator {
        source: TaggedSource,
        image: Composition,
    },
    NotInjective {
        first: TaggedSource,
        second: TaggedSource,
        image: Composition,
    },
    ImagesOverlap {
        first: TaggedSource,
        second: TaggedSource,
        image: Composition,
    },
    BackwardFailed {
        target: Composition,
        error: Error,
    },
    NotLeftInverse {
        source: TaggedSource,
        image: Composition,
        back: TaggedSource,
    },
    NotRightInverse {
        target: Composition,
        back: TaggedSource,
        image: Composition,
    },
    NotSurjective {
        target: Composition,
    },
    CardinalityMismatch {
        domain: usize,
        target: usize,
    },
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::ForwardFailed { source, error } => {
                write!(f, "forward failed on {source}: {error}")
            }
            Failure::OutsideTarget { source, image } => {
                write!(f, "image {image} of {source} is outside the target")
            }
            Failure::WrongDiscriminator { source, image } => {
                write!(
                    f,
                    "last part of {image} does not identify origin of {source}"
                )
            }
            Failure::NotInjective {
                first,
                second,
                image,
            } => {
                write!(f, "{first} and {second} both map to {image}")
            }
            Failure::ImagesOverlap {
                first,
                second,
                image,
            } => {
                write!(f, "images of {first} and {second} overlap at {image}")
            }
            Failure::BackwardFailed { target, error } => {
                write!(f, "backward failed on {target}: {error}")
            }
            Failure::NotLeftInverse {
                source,
                image,
                back,
            } => {
                write!(f, "{source} -> {image} -> {back}")
            }
            Failure::NotRightInverse {
                target,
                back,
                image,
            } => {
                write!(f, "{target} -> {back} -> {image}")
            }
            Failure::NotSurjective { target } => write!(f, "{target} has no preimage"),
            Failure::CardinalityMismatch { domain, target } => {
                write!(f, "domain has {domain} elements but target has {target}")
            }
        }
    }
}

/// Outcome of one exhaustive bijection check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub map: BijectionMap,
    pub n: u32,
    /// Domain size per origin, in [`BijectionMap::origins`] order.
    pub domain_sizes: [(Origin, usize); 2],
    pub target_size: usize,
    pub failures: Vec<Failure>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn domain_size(&self) -> usize {
        self.domain_sizes.iter().map(|(_, s)| s).sum()
    }
}

impl fmt::Display for VerifyReport {
    /// `thm4 n=5 pass target=8 from-min2=3 from-odd=5`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "pass" } else { "FAIL" };
        write!(
            f,
            "{} n={} {} target={}",
            self.map, self.n, status, self.target_size
        )?;
        for (origin, size) in &self.domain_sizes {
            write!(f, " {origin}={size}")?;
        }
        Ok(())
    }
}

/// Exhaustively checks that `map` is a bijection at size `n`: images land in
/// the target, are discriminated by their last part, are pairwise distinct,
/// both round trips are identities, and cardinalities agree.
pub fn verify_bijection(map: BijectionMap, n: u32, config: &VerifyConfig) -> Result<VerifyReport> {
    map.check_range(n)?;
    if n > config.bound {
        return Err(Error::TooLarge {
            n,
            bound: config.bound,
        });
    }
    let target_class = map.target_class();
    let mut failures = Vec::new();
    let mut images: HashMap<Composition, TaggedSource> = HashMap::new();
    let mut domain_sizes = [(map.origins()[0], 0), (map.origins()[1], 0)];

    for (origin, size) in domain_sizes.iter_mut() {
        let (class, total) = map.source(*origin, n)?;
        for payload in enumerate(class, total) {
            *size += 1;
            let source = TaggedSource::new(*origin, payload);
            let image = match map.forward(&source, n) {
                Ok(image) => image,
                Err(error) => {
                    failures.push(Failure::ForwardFailed { source, error });
                    continue;
                }
            };
            if !target_class.contains(&image) || image.total() != n {
                failures.push(Failure::OutsideTarget {
                    source: source.clone(),
                    image: image.clone(),
                });
            }
            if map.discriminate(&image) != Some(*origin) {
                failures.push(Failure::WrongDiscriminator {
                    source: source.clone(),
                    image: image.clone(),
                });
            }
            match map.backward(&image, n) {
                Ok(back) if back == source => {}
                Ok(back) => failures.push(Failure::NotLeftInverse {
                    source: source.clone(),
                    image: image.clone(),
                    back,
                }),
                Err(error) => failures.push(Failure::BackwardFailed {
                    target: image.clone(),
                    error,
                }),
            }
            if let Some(first) = images.get(&image) {
                let failure = if first.origin == source.origin {
                    Failure::NotInjective {
                        first: first.clone(),
                        second: source,
                        image,
                    }
                } else {
                    Failure::ImagesOverlap {
                        first: first.clone(),
                        second: source,
                        image,
                    }
                };
                failures.push(failure);
            } else {
                images.insert(image, source);
            }
        }
    }

    let mut target_size = 0;
    for target in enumerate(target_class, n) {
        target_size += 1;
        if !images.contains_key(&target) {
            failures.push(Failure::NotSurjective {
                target: target.clone(),
            });
        }
        match map.backward(&target, n) {
            Ok(back) => match map.forward(&back, n) {
                Ok(image) if image == target => {}
                Ok(image) => failures.push(Failure::NotRightInverse {
                    target,
                    back,
                    image,
                }),
                Err(error) => failures.push(Failure::ForwardFailed {
                    source: back,
                    error,
                }),
            },
            Err(error) => failures.push(Failure::BackwardFailed { target, error }),
        }
    }

    let domain: usize = domain_sizes.iter().map(|(_, s)| s).sum();
    if domain != target_size {
        failures.push(Failure::CardinalityMismatch {
            domain,
            target: target_size,
        });
    }

    Ok(VerifyReport {
        map,
        n,
        domain_sizes,
        target_size,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::comp;

    fn fwd(map: BijectionMap, origin: Origin, parts: &[u32], n: u32) -> Composition {
        map.forward(&TaggedSource::new(origin, comp(parts)), n)
            .unwrap()
    }

    fn bwd(map: BijectionMap, parts: &[u32], n: u32) -> TaggedSource {
        map.backward(&comp(parts), n).unwrap()
    }

    use BijectionMap::*;
    use Origin::*;

    #[test]
    fn prop1_examples() {
        assert_eq!(fwd(Prop1, FromNMinus2, &[2, 1], 5), comp(&[2, 1, 2]));
        assert_eq!(fwd(Prop1, FromNMinus1, &[2, 2], 5), comp(&[2, 2, 1]));
        assert_eq!(
            fwd(Prop1, FromNMinus1, &[1, 1, 1, 1], 5),
            comp(&[1, 1, 1, 1, 1])
        );
        assert_eq!(
            bwd(Prop1, &[2, 1, 2], 5),
            TaggedSource::new(FromNMinus2, comp(&[2, 1]))
        );
        assert_eq!(
            bwd(Prop1, &[1, 1, 1, 1, 1], 5),
            TaggedSource::new(FromNMinus1, comp(&[1, 1, 1, 1]))
        );
        assert_eq!(
            bwd(Prop1, &[1, 2], 3),
            TaggedSource::new(FromNMinus2, comp(&[1]))
        );
    }

    #[test]
    fn prop2_examples() {
        assert_eq!(fwd(Prop2, FromNMinus2, &[3, 1], 6), comp(&[3, 3]));
        assert_eq!(fwd(Prop2, FromNMinus1, &[5], 6), comp(&[5, 1]));
        assert_eq!(
            fwd(Prop2, FromNMinus2, &[1, 1, 1, 1], 6),
            comp(&[1, 1, 1, 3])
        );
        assert_eq!(
            bwd(Prop2, &[5, 1], 6),
            TaggedSource::new(FromNMinus1, comp(&[5]))
        );
        assert_eq!(
            bwd(Prop2, &[3, 3], 6),
            TaggedSource::new(FromNMinus2, comp(&[3, 1]))
        );
        assert_eq!(
            bwd(Prop2, &[3], 3),
            TaggedSource::new(FromNMinus2, comp(&[1]))
        );
    }

    #[test]
    fn prop3_examples() {
        assert_eq!(fwd(Prop3, FromNMinus2, &[5], 7), comp(&[5, 2]));
        assert_eq!(fwd(Prop3, FromNMinus1, &[6], 7), comp(&[7]));
        assert_eq!(fwd(Prop3, FromNMinus1, &[2, 2, 2], 7), comp(&[2, 2, 3]));
        assert_eq!(
            bwd(Prop3, &[5, 2], 7),
            TaggedSource::new(FromNMinus2, comp(&[5]))
        );
        assert_eq!(
            bwd(Prop3, &[7], 7),
            TaggedSource::new(FromNMinus1, comp(&[6]))
        );
        assert_eq!(
            bwd(Prop3, &[2, 2], 4),
            TaggedSource::new(FromNMinus2, comp(&[2]))
        );
    }

    #[test]
    fn thm4_examples() {
        assert_eq!(fwd(Thm4, FromMin2, &[3, 2], 5), comp(&[1, 2, 2]));
        assert_eq!(fwd(Thm4, FromMin2, &[5], 5), comp(&[1, 1, 1, 2]));
        assert_eq!(fwd(Thm4, FromOdd, &[3, 1, 1], 5), comp(&[2, 1, 1, 1]));
        assert_eq!(
            fwd(Thm4, FromOdd, &[1, 1, 1, 1, 1], 5),
            comp(&[1, 1, 1, 1, 1])
        );
        assert_eq!(
            bwd(Thm4, &[2, 1, 2], 5),
            TaggedSource::new(FromMin2, comp(&[2, 3]))
        );
        assert_eq!(
            bwd(Thm4, &[1, 1, 2, 1], 5),
            TaggedSource::new(FromOdd, comp(&[1, 1, 3]))
        );
        assert_eq!(bwd(Thm4, &[2], 2), TaggedSource::new(FromMin2, comp(&[2])));
        assert_eq!(fwd(Thm4, FromMin2, &[2], 2), comp(&[2]));
    }

    #[test]
    fn range_and_payload_errors() {
        let src = TaggedSource::new(FromNMinus1, comp(&[1]));
        assert_eq!(
            Prop1.forward(&src, 2),
            Err(Error::BelowRange {
                map: "prop1",
                n: 2,
                min: 3
            })
        );
        assert!(matches!(
            Prop3.backward(&comp(&[3]), 3),
            Err(Error::BelowRange { .. })
        ));
        // Wrong total for the tag.
        let src = TaggedSource::new(FromNMinus2, comp(&[2, 2]));
        assert!(matches!(
            Prop1.forward(&src, 5),
            Err(Error::BadPayload { .. })
        ));
        // Wrong class.
        let src = TaggedSource::new(FromOdd, comp(&[2, 3]));
        assert!(matches!(
            Thm4.forward(&src, 5),
            Err(Error::BadPayload { .. })
        ));
        // Wrong tag family.
        let src = TaggedSource::new(FromOdd, comp(&[1, 1, 1]));
        assert!(matches!(
            Prop2.forward(&src, 5),
            Err(Error::WrongOrigin { .. })
        ));
        assert!(matches!(
            Thm4.backward(&comp(&[3, 2]), 5),
            Err(Error::BadPayload { .. })
        ));
    }

    #[test]
    fn verify_small_cases() {
        let config = VerifyConfig::default();
        let report = verify_bijection(Prop1, 5, &config).unwrap();
        assert!(report.passed());
        assert_eq!(report.domain_sizes, [(FromNMinus2, 3), (FromNMinus1, 5)]);
        assert_eq!(report.target_size, 8);

        let report = verify_bijection(Thm4, 5, &config).unwrap();
        assert!(report.passed());
        assert_eq!(report.domain_sizes, [(FromMin2, 3), (FromOdd, 5)]);
        assert_eq!(
            report.to_string(),
            "thm4 n=5 pass target=8 from-min2=3 from-odd=5"
        );

        let report = verify_bijection(Prop2, 3, &config).unwrap();
        assert!(report.passed());
        assert_eq!(report.domain_size(), 2);
        assert_eq!(report.target_size, 2);

        assert!(verify_bijection(Prop3, 3, &config).is_err());
        assert!(matches!(
            verify_bijection(Prop1, 21, &config),
            Err(Error::TooLarge { n: 21, bound: 20 })
        ));
    }

    #[test]
    fn names_round_trip() {
        for map in BijectionMap::ALL_MAPS {
            assert_eq!(map.name().parse::<BijectionMap>().unwrap(), map);
            for origin in map.origins() {
                assert_eq!(origin.name().parse::<Origin>().unwrap(), origin);
            }
        }
    }
}
