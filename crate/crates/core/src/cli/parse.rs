//! Text forms for operators, states and axes.
//!
//! Operators: `id | sx | sy | sz | h`, `rz:<phi>`, `rot:<nx>,<ny>,<nz>,<theta>`,
//! `mat:<a_re>,<a_im>,<b_re>,<b_im>`. The named forms are the unit-determinant
//! versions `iσx`, `iσy`, `iσz`, `iH`. States: `0 | 1 | + | -`,
//! `amp:<re0>,<im0>,<re1>,<im1>`. Angles are in radians.

use crate::error::{Error, Result};
use crate::mat2::C64;
use crate::opsets::{Axis, Unimodular};
use crate::qcore::StateVector;

fn parse_error(column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        column,
        message: message.into(),
    }
}

/// Comma-separated floats starting at 1-based `column`.
fn floats<const N: usize>(body: &str, column: usize) -> Result<[f64; N]> {
    let mut out = [0.0; N];
    let mut col = column;
    let mut fields = body.split(',');
    for (k, slot) in out.iter_mut().enumerate() {
        let field = fields.next().ok_or_else(|| {
            parse_error(
                column + body.len(),
                format!("expected {N} numbers, got {k}"),
            )
        })?;
        let trimmed = field.trim();
        *slot = trimmed
            .parse::<f64>()
            .ok()
            .filter(|x| x.is_finite())
            .ok_or_else(|| parse_error(col, format!("not a finite number: `{trimmed}`")))?;
        col += field.len() + 1;
    }
    if fields.next().is_some() {
        return Err(parse_error(
            col - 1,
            format!("expected {N} numbers, got more"),
        ));
    }
    Ok(out)
}

fn split_tag(text: &str) -> Option<(&str, &str, usize)> {
    text.split_once(':')
        .map(|(tag, body)| (tag, body, tag.len() + 2))
}

pub fn parse_operator(text: &str) -> Result<Unimodular> {
    let text = text.trim();
    match text {
        "id" => return Ok(Unimodular::identity()),
        "sx" => return Ok(Unimodular::i_sigma_x()),
        "sy" => return Ok(Unimodular::i_sigma_y()),
        "sz" => return Ok(Unimodular::i_sigma_z()),
        "h" => return Ok(Unimodular::i_hadamard()),
        _ => {}
    }
    let (tag, body, col) =
        split_tag(text).ok_or_else(|| parse_error(1, format!("unknown operator `{text}`")))?;
    match tag {
        "rz" => {
            let [phi] = floats::<1>(body, col)?;
            Ok(Unimodular::rz(phi))
        }
        "rot" => {
            let [nx, ny, nz, theta] = floats::<4>(body, col)?;
            let axis = Axis::normalized([nx, ny, nz])
                .map_err(|_| parse_error(col, "rotation axis is zero"))?;
            Ok(Unimodular::from_axis_angle(&axis, theta))
        }
        "mat" => {
            let [ar, ai, br, bi] = floats::<4>(body, col)?;
            Unimodular::new(C64::new(ar, ai), C64::new(br, bi))
        }
        _ => Err(parse_error(1, format!("unknown operator form `{tag}`"))),
    }
}

/// `mat:` form with shortest round-trip floats.
pub fn render_operator(u: &Unimodular) -> String {
    u.to_string()
}

pub fn parse_state(text: &str) -> Result<StateVector> {
    let text = text.trim();
    match text {
        "0" => return Ok(StateVector::zero()),
        "1" => return Ok(StateVector::one()),
        "+" => return Ok(StateVector::plus()),
        "-" => return Ok(StateVector::minus()),
        _ => {}
    }
    match split_tag(text) {
        Some(("amp", body, col)) => {
            let [r0, i0, r1, i1] = floats::<4>(body, col)?;
            StateVector::qubit(C64::new(r0, i0), C64::new(r1, i1))
        }
        _ => Err(parse_error(1, format!("unknown state `{text}`"))),
    }
}

/// `x,y,z`, normalized.
pub fn parse_axis(text: &str) -> Result<Axis> {
    let v = floats::<3>(text.trim(), 1)?;
    Axis::normalized(v).map_err(|_| parse_error(1, "axis is zero"))
}
