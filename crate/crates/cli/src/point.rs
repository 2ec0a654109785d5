//! Complex literals on the command line: `a`, `bi`, `a+bi`, `a-bi`, no spaces.

use flatdual::Coefficient;

pub fn parse_point(text: &str) -> Result<Coefficient, String> {
    if text.is_empty()
        || text
            .chars()
            .any(|c| c.is_whitespace() || c == 'j' || c == 'J')
    {
        return Err(format!(
            "invalid complex number {text:?}: expected a, bi or a+bi without spaces"
        ));
    }
    let z: Coefficient = text.parse().map_err(|_| {
        format!("invalid complex number {text:?}: expected a, bi or a+bi without spaces")
    })?;
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(format!("complex number {text:?} is not finite"));
    }
    Ok(z)
}
