//! Run reports: one record per colored instance, as JSON or CSV.

use serde::Serialize;

pub const CSV_HEADER: &str = "id,n,omega,colors,budget,bound_kind,elapsed_ms,verified,oracle_chi";

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub schema: u32,
    pub id: String,
    pub n: usize,
    pub omega: u32,
    pub colors: u32,
    pub budget: u32,
    pub bound_kind: String,
    pub elapsed_ms: f64,
    pub verified: bool,
    pub oracle_chi: Option<u32>,
}

impl RunReport {
    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{:.3},{},{}",
            self.id,
            self.n,
            self.omega,
            self.colors,
            self.budget,
            self.bound_kind,
            self.elapsed_ms,
            self.verified,
            self.oracle_chi.map_or(String::new(), |c| c.to_string())
        )
    }
}
