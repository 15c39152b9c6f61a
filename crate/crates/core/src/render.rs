//! Deterministic board drawings of a composition as a row of tiles.

use std::fmt::Write as _;

use crate::codec::encode;
use crate::composition::Composition;
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Ascii,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Shading {
    #[default]
    None,
    /// Even-length tiles filled gray.
    EvenGray,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Annotation {
    #[default]
    None,
    /// Cut/join letters under the interior boundaries.
    CutJoin,
    /// Tile lengths.
    Lengths,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RenderSpec {
    pub format: Format,
    pub shading: Shading,
    pub annotation: Annotation,
}

pub const CELL_PX: u32 = 40;
pub const MARGIN_PX: u32 = 10;
pub const GRAY: &str = "#cccccc";
const ANNOTATION_PX: u32 = 30;

pub fn render(c: &Composition, spec: &RenderSpec) -> Result<String> {
    match spec.format {
        Format::Ascii => render_ascii(c, spec),
        Format::Svg => render_svg(c, spec),
    }
}

/// `|###|#|#|` followed by an optional annotation row. ASCII output has no
/// fill, so shading is ignored.
pub fn render_ascii(c: &Composition, spec: &RenderSpec) -> Result<String> {
    let word = encode(c)?;
    let mut out = String::from("|");
    for &part in c.parts() {
        out.extend(std::iter::repeat_n('#', part as usize));
        out.push('|');
    }
    out.push('\n');
    match spec.annotation {
        Annotation::None => {}
        Annotation::CutJoin => {
            let letters: Vec<String> = word
                .letters()
                .iter()
                .map(|l| l.as_char().to_string())
                .collect();
            out.push_str(&letters.join(" "));
            out.push('\n');
        }
        Annotation::Lengths => {
            let lengths: Vec<String> = c.parts().iter().map(u32::to_string).collect();
            out.push_str(&lengths.join(" "));
            out.push('\n');
        }
    }
    Ok(out)
}

/// One rounded rectangle per tile, 40px cells, dashed lines at joins.
pub fn render_svg(c: &Composition, spec: &RenderSpec) -> Result<String> {
    let word = encode(c)?;
    let n = c.total();
    let width = n * CELL_PX + 2 * MARGIN_PX;
    let mut height = CELL_PX + 2 * MARGIN_PX;
    if spec.annotation != Annotation::None {
        height += ANNOTATION_PX;
    }
    let top = MARGIN_PX;
    let bottom = MARGIN_PX + CELL_PX;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r##"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"##
    );
    let mut offset = 0;
    for &part in c.parts() {
        let fill = match spec.shading {
            Shading::EvenGray if part % 2 == 0 => GRAY,
            _ => "#ffffff",
        };
        let _ = writeln!(
            svg,
            r##"  <rect x="{}" y="{top}" width="{}" height="{CELL_PX}" rx="6" ry="6" fill="{fill}" stroke="#000000" stroke-width="3"/>"##,
            MARGIN_PX + offset * CELL_PX,
            part * CELL_PX,
        );
        offset += part;
    }
    for (i, letter) in word.letters().iter().enumerate() {
        if letter.as_char() == 'J' {
            let x = MARGIN_PX + (i as u32 + 1) * CELL_PX;
            let _ = writeln!(
                svg,
                r##"  <line x1="{x}" y1="{top}" x2="{x}" y2="{bottom}" stroke="#000000" stroke-width="2" stroke-dasharray="4 4"/>"##
            );
        }
    }
    let text_y = bottom + ANNOTATION_PX - 8;
    match spec.annotation {
        Annotation::None => {}
        Annotation::CutJoin => {
            for (i, letter) in word.letters().iter().enumerate() {
                let x = MARGIN_PX + (i as u32 + 1) * CELL_PX;
                let _ = writeln!(
                    svg,
                    r##"  <text x="{x}" y="{text_y}" font-family="monospace" font-size="20" text-anchor="middle">{}</text>"##,
                    letter.as_char()
                );
            }
        }
        Annotation::Lengths => {
            let mut offset = 0;
            for &part in c.parts() {
                let x = MARGIN_PX + offset * CELL_PX + part * CELL_PX / 2;
                let _ = writeln!(
                    svg,
                    r##"  <text x="{x}" y="{text_y}" font-family="monospace" font-size="20" text-anchor="middle">{part}</text>"##
                );
                offset += part;
            }
        }
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}
