//! CSV and manifest writers. Output bytes depend only on the inputs: fixed
//! column order, dB values at six significant digits, no timestamps.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::error::Result;
use crate::experiments::{CrossoverSearch, DoublingDeltas, McResult, ScenarioConfig, SweepResult};

const SIG_DIGITS: i32 = 6;

/// Renders `x` with six significant digits in fixed notation,
/// e.g. `16.3412987` as `16.3413`.
pub fn format_db(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let mut magnitude = x.abs().log10().floor() as i32;
    loop {
        let decimals = (SIG_DIGITS - 1 - magnitude).max(0) as usize;
        let s = format!("{x:.decimals$}");
        let rounded: f64 = s.parse().expect("formatted float parses");
        // rounding can carry into the next decade (9.999996 -> 10.00000)
        if rounded != 0.0 && rounded.abs().log10().floor() as i32 > magnitude {
            magnitude += 1;
            continue;
        }
        if rounded == 0.0 {
            return "0".into();
        }
        return s;
    }
}

pub fn sweep_csv(res: &SweepResult) -> String {
    let mut out = String::from("k1,k2,snr_exact_db,snr_closed_db,snr_single_db\n");
    for r in &res.rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.k1,
            r.k2,
            format_db(r.snr_exact_db),
            format_db(r.snr_closed_form_db),
            format_db(r.snr_single_irs_db)
        ));
    }
    out
}

pub fn rician_csv(results: &[McResult]) -> String {
    let mut out = String::from("tau,trials,mean_snr_db,std_err_db,case\n");
    for r in results {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.tau,
            r.trials,
            format_db(r.mean_snr_db),
            format_db(r.std_err_db),
            r.case
        ));
    }
    out
}

pub fn doubling_csv(res: &DoublingDeltas) -> String {
    let mut out = String::from(
        "k_small,k_large,snr_single_small_db,snr_single_large_db,snr_double_small_db,snr_double_large_db,\
         delta_single_db,delta_double_db,closed_delta_single_db,closed_delta_double_db\n",
    );
    let cols = [
        res.snr_single_db[0],
        res.snr_single_db[1],
        res.snr_double_db[0],
        res.snr_double_db[1],
        res.delta_single_db,
        res.delta_double_db,
        res.closed_delta_single_db,
        res.closed_delta_double_db,
    ];
    let cols: Vec<String> = cols.iter().map(|&v| format_db(v)).collect();
    out.push_str(&format!("{},{},{}\n", res.k_small, 2 * res.k_small, cols.join(",")));
    out
}

pub fn crossover_csv(res: &CrossoverSearch) -> String {
    let mut out = String::from("k,snr_double_db,snr_single_db\n");
    for r in &res.rows {
        out.push_str(&format!(
            "{},{},{}\n",
            r.k,
            format_db(r.snr_double_db),
            format_db(r.snr_single_db)
        ));
    }
    out
}

/// Everything needed to re-run an experiment.
#[derive(Debug, Serialize)]
pub struct Manifest<'a> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'a str,
    pub seed: u64,
    pub parameters: serde_json::Value,
    pub scenario_digest: String,
    pub scenario: &'a ScenarioConfig,
    pub csv: String,
    pub summary: serde_json::Value,
}

impl<'a> Manifest<'a> {
    pub fn new(
        command: &'a str,
        seed: u64,
        parameters: serde_json::Value,
        scenario: &'a ScenarioConfig,
        csv_path: &Path,
        summary: serde_json::Value,
    ) -> Self {
        Manifest {
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            command,
            seed,
            parameters,
            scenario_digest: scenario.digest(),
            scenario,
            csv: csv_path
                .file_name()
                .map(|f| f.to_string_lossy().into_owned())
                .unwrap_or_default(),
            summary,
        }
    }
}

/// `results/sweep.csv` -> `results/sweep.manifest.json`.
pub fn manifest_path(csv_path: &Path) -> PathBuf {
    csv_path.with_extension("manifest.json")
}

/// Writes to a sibling temporary file and renames it into place.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir)?;
    }
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(bytes)?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path).inspect_err(|_| {
        let _ = fs::remove_file(&tmp);
    })?;
    Ok(())
}

/// Writes the CSV, then its manifest. Returns the manifest path.
pub fn write_outputs(csv: &str, manifest: &Manifest<'_>, csv_path: &Path) -> Result<PathBuf> {
    let mut json = serde_json::to_string_pretty(manifest).expect("manifest serializes");
    json.push('\n');
    let mpath = manifest_path(csv_path);
    write_atomic(csv_path, csv.as_bytes())?;
    write_atomic(&mpath, json.as_bytes())?;
    Ok(mpath)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn db_formatting() {
        assert_eq!(format_db(16.341_298_7), "16.3413");
        assert_eq!(format_db(103.0), "103.000");
        assert_eq!(format_db(-86.661_742_5), "-86.6617");
        assert_eq!(format_db(1.249_387_366), "1.24939");
        assert_eq!(format_db(0.001_234_567), "0.00123457");
        assert_eq!(format_db(9.999_996), "10.0000");
        assert_eq!(format_db(123_456_789.0), "123456789");
        assert_eq!(format_db(0.0), "0");
        assert_eq!(format_db(f64::NEG_INFINITY), "-inf");
    }

    #[test]
    fn manifest_path_replaces_extension() {
        assert_eq!(manifest_path(Path::new("out/sweep.csv")), Path::new("out/sweep.manifest.json"));
    }

    #[test]
    fn atomic_write_leaves_no_temp() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("nested/a.csv");
        write_atomic(&p, b"x\n").unwrap();
        assert_eq!(fs::read(&p).unwrap(), b"x\n");
        let names: Vec<_> = fs::read_dir(p.parent().unwrap()).unwrap().collect();
        assert_eq!(names.len(), 1);
    }
}
