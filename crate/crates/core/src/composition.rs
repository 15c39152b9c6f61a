//! The composition value type and the four restriction classes.

use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;

/// An ordered sequence of positive parts. The empty sequence is the unique
/// composition of 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    /// Builds a composition, rejecting zero parts.
    pub fn new(parts: Vec<u32>) -> Result<Self, ParseError> {
        if let Some(zero) = parts.iter().find(|&&p| p == 0) {
            return Err(ParseError::BadPart(zero.to_string()));
        }
        Ok(Self { parts })
    }

    /// Caller guarantees every part is at least 1.
    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.iter().all(|&p| p >= 1));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The integer this composition sums to.
    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn first(&self) -> Option<u32> {
        self.parts.first().copied()
    }

    pub fn last(&self) -> Option<u32> {
        self.parts.last().copied()
    }

    /// Tags of every class whose predicate admits all parts. `All` is always
    /// present; the empty composition belongs to every class.
    pub fn classify(&self) -> ClassSet {
        ClassSpec::ALL_CLASSES
            .iter()
            .filter(|class| class.contains(self))
            .fold(ClassSet::default(), |set, &class| set.with(class))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{part}")?;
        }
        Ok(())
    }
}

impl FromStr for Composition {
    type Err = ParseError;

    /// Parses `3,1,1`; `-` is the empty composition. No whitespace is allowed.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "" => Err(ParseError::Empty),
            "-" => Ok(Self::empty()),
            _ => s
                .split(',')
                .map(|tok| {
                    let valid = !tok.is_empty() && tok.bytes().all(|b| b.is_ascii_digit());
                    match tok.parse::<u32>() {
                        Ok(p) if valid && p >= 1 => Ok(p),
                        _ => Err(ParseError::BadPart(tok.to_string())),
                    }
                })
                .collect::<Result<Vec<_>, _>>()
                .map(|parts| Self { parts }),
        }
    }
}

impl From<Composition> for Vec<u32> {
    fn from(c: Composition) -> Self {
        c.parts
    }
}

/// A restriction class on part values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassSpec {
    /// Every part `k >= 1`.
    All,
    /// Parts in `{1, 2}`: square and domino tilings.
    Parts12,
    /// Odd parts only.
    Odd,
    /// Parts at least two.
    Min2,
}

impl ClassSpec {
    pub const ALL_CLASSES: [ClassSpec; 4] = [
        ClassSpec::All,
        ClassSpec::Parts12,
        ClassSpec::Odd,
        ClassSpec::Min2,
    ];

    /// Whether `part` is an allowed part value. Zero is never allowed.
    pub fn admits(self, part: u32) -> bool {
        part >= 1
            && match self {
                ClassSpec::All => true,
                ClassSpec::Parts12 => part <= 2,
                ClassSpec::Odd => part % 2 == 1,
                ClassSpec::Min2 => part >= 2,
            }
    }

    pub fn contains(self, c: &Composition) -> bool {
        c.parts().iter().all(|&p| self.admits(p))
    }

    /// Smallest allowed part strictly greater than `part`, if any.
    pub fn next_part(self, part: u32) -> Option<u32> {
        match self {
            ClassSpec::All => part.checked_add(1),
            ClassSpec::Parts12 => (part < 2).then_some(part + 1),
            ClassSpec::Odd => part.checked_add(if part % 2 == 1 { 2 } else { 1 }),
            ClassSpec::Min2 => part.checked_add(1).map(|p| p.max(2)),
        }
    }

    /// Smallest allowed part.
    pub fn min_part(self) -> u32 {
        match self {
            ClassSpec::Min2 => 2,
            _ => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ClassSpec::All => "all",
            ClassSpec::Parts12 => "parts12",
            ClassSpec::Odd => "odd",
            ClassSpec::Min2 => "min2",
        }
    }

    fn bit(self) -> u8 {
        1 << (self as u8)
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassSpec {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "all" => Ok(ClassSpec::All),
            "parts12" => Ok(ClassSpec::Parts12),
            "odd" => Ok(ClassSpec::Odd),
            "min2" => Ok(ClassSpec::Min2),
            _ => Err(ParseError::UnknownClass(s.to_string())),
        }
    }
}

/// Small bit set of class tags, as returned by [`Composition::classify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ClassSet(u8);

impl ClassSet {
    pub fn with(self, class: ClassSpec) -> Self {
        Self(self.0 | class.bit())
    }

    pub fn contains(self, class: ClassSpec) -> bool {
        self.0 & class.bit() != 0
    }

    pub fn iter(self) -> impl Iterator<Item = ClassSpec> {
        ClassSpec::ALL_CLASSES
            .into_iter()
            .filter(move |c| self.contains(*c))
    }

    pub fn bits(self) -> u8 {
        self.0
    }
}

impl FromIterator<ClassSpec> for ClassSet {
    fn from_iter<I: IntoIterator<Item = ClassSpec>>(iter: I) -> Self {
        iter.into_iter().fold(Self::default(), Self::with)
    }
}

/// Shorthand used throughout the tests: `comp(&[3, 1, 1])`.
pub fn comp(parts: &[u32]) -> Composition {
    Composition::new(parts.to_vec()).expect("parts must be positive")
}
