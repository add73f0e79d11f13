use umbral::transforms::{cumulants_via_log, factorial_umbra, moments_from_cumulants, umbra_from_factorial};
use umbral::{CumulantSeq, FactorialMoments, Polynomial, Result, Umbra};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum SeqKind {
    Moments,
    Cumulants,
    Factorial,
}

/// Converts `values` (index 0 first, which must be 1) between moments,
/// cumulants and factorial moments.
pub fn convert(from: SeqKind, to: SeqKind, values: Vec<Polynomial>) -> Result<Vec<Polynomial>> {
    let umbra = match from {
        SeqKind::Moments => Umbra::from_moments(values)?,
        SeqKind::Cumulants => moments_from_cumulants(&CumulantSeq::new(values)?),
        SeqKind::Factorial => umbra_from_factorial(&FactorialMoments::new(values)?),
    };
    Ok(match to {
        SeqKind::Moments => umbra.moments().to_vec(),
        SeqKind::Cumulants => cumulants_via_log(&umbra).values().to_vec(),
        SeqKind::Factorial => factorial_umbra(&umbra).values().to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(items: &[&str]) -> Vec<Polynomial> {
        items.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn bell_numbers_round_trip() {
        let bell = seq(&["1", "1", "2", "5", "15"]);
        assert_eq!(convert(SeqKind::Moments, SeqKind::Cumulants, bell.clone()).unwrap(), seq(&["1"; 5]));
        assert_eq!(convert(SeqKind::Factorial, SeqKind::Moments, seq(&["1"; 5])).unwrap(), bell);
        assert_eq!(convert(SeqKind::Cumulants, SeqKind::Factorial, seq(&["1", "x", "x", "x"])).unwrap(),
            seq(&["1", "x", "x^2", "x^3"]));
        assert!(convert(SeqKind::Moments, SeqKind::Moments, seq(&["2", "1"])).is_err());
    }
}
