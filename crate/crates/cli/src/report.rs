use serde::Serialize;
use umbral::transforms::{cumulants_via_log, factorial_umbra};
use umbral::{Polynomial, Umbra};

use crate::error::CliError;
use crate::eval::evaluate;
use crate::expr::Expr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub n: usize,
    pub moment: Polynomial,
    pub cumulant: Polynomial,
    pub factorial_moment: Polynomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub expression: String,
    pub order: usize,
    pub rows: Vec<ReportRow>,
}

impl Report {
    pub fn new(e: &Expr, order: usize) -> Result<Report, CliError> {
        let u = evaluate(e, order)?;
        Ok(Report::of_umbra(e.to_string(), &u))
    }

    pub fn of_umbra(expression: String, u: &Umbra) -> Report {
        let k = cumulants_via_log(u);
        let fm = factorial_umbra(u);
        let rows = (0..=u.order())
            .map(|n| ReportRow {
                n,
                moment: u.moment(n).clone(),
                cumulant: k.values()[n].clone(),
                factorial_moment: fm.values()[n].clone(),
            })
            .collect();
        Report { expression, order: u.order(), rows }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,moment,cumulant,factorial_moment\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},\"{}\",\"{}\",\"{}\"\n",
                r.n, r.moment, r.cumulant, r.factorial_moment
            ));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
        }
    }
}
