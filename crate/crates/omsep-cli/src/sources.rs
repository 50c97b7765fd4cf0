//! Matroid sources shared by the subcommands: files, builders, and the
//! published small configurations.

use crate::report::Report;
use clap::Args;
use omsep_core::construct::{self, VectorConfiguration};
use omsep_core::error::OmError;
use omsep_core::matroid::OrientedMatroid;
use omsep_core::ratmat::{rat, rat_int};
use serde_json::json;

#[derive(Args, Clone)]
pub struct MatroidSource {
    /// Matroid JSON file.
    #[arg(long)]
    pub file: Option<std::path::PathBuf>,
    /// Alternating matroid C^{n,d}: two integers n d.
    #[arg(long, num_args = 2, value_names = ["N", "D"])]
    pub alternating: Option<Vec<usize>>,
    /// Free matroid on n elements.
    #[arg(long)]
    pub free: Option<usize>,
    /// Graph JSON file (graphical oriented matroid).
    #[arg(long)]
    pub graph: Option<std::path::PathBuf>,
    /// Vector configuration JSON file.
    #[arg(long)]
    pub vectors: Option<std::path::PathBuf>,
    /// Rank-4 corank-2 family from a composition, e.g. "3,2,1".
    #[arg(long)]
    pub corank2: Option<String>,
    /// The pentagon-with-center configuration (exact rational realization).
    #[arg(long)]
    pub pentagon: bool,
}

pub struct LoadedMatroid {
    pub matroid: OrientedMatroid,
    pub graphical: bool,
    pub rank2_alternating: bool,
}

impl MatroidSource {
    pub fn load(&self, report: &mut Report) -> Result<LoadedMatroid, OmError> {
        let mut picked = 0;
        for present in [
            self.file.is_some(),
            self.alternating.is_some(),
            self.free.is_some(),
            self.graph.is_some(),
            self.vectors.is_some(),
            self.corank2.is_some(),
            self.pentagon,
        ] {
            picked += present as usize;
        }
        if picked != 1 {
            return Err(OmError::InvalidInput(
                "give exactly one matroid source (--file, --alternating, --free, --graph, --vectors, --corank2, --pentagon)"
                    .into(),
            ));
        }
        if let Some(path) = &self.file {
            report.hash_file(path)?;
            report.record_source(json!({"file": path.display().to_string()}));
            let parsed: omsep_core::io::MatroidFile = report.read_json(path)?;
            return Ok(LoadedMatroid {
                matroid: parsed.into_matroid()?,
                graphical: false,
                rank2_alternating: false,
            });
        }
        if let Some(nd) = &self.alternating {
            let (n, d) = (nd[0], nd[1]);
            if d > n || n > 63 {
                return Err(OmError::InvalidInput("need 0 ≤ d ≤ n ≤ 63".into()));
            }
            report.record_source(json!({"alternating": [n, d]}));
            return Ok(LoadedMatroid {
                matroid: construct::alternating(n, d),
                graphical: false,
                rank2_alternating: d == 2,
            });
        }
        if let Some(n) = self.free {
            report.record_source(json!({"free": n}));
            return Ok(LoadedMatroid {
                matroid: OrientedMatroid::new(omsep_core::GroundSet::numeric(n), vec![])?,
                graphical: false,
                rank2_alternating: false,
            });
        }
        if let Some(path) = &self.graph {
            report.hash_file(path)?;
            report.record_source(json!({"graph": path.display().to_string()}));
            let parsed: omsep_core::io::GraphFile = report.read_json(path)?;
            return Ok(LoadedMatroid {
                matroid: construct::from_digraph(&parsed.into_digraph()?)?,
                graphical: true,
                rank2_alternating: false,
            });
        }
        if let Some(path) = &self.vectors {
            report.hash_file(path)?;
            report.record_source(json!({"vectors": path.display().to_string()}));
            let parsed: omsep_core::io::VectorFile = report.read_json(path)?;
            return Ok(LoadedMatroid {
                matroid: construct::from_vectors(&parsed.into_config()?)?,
                graphical: false,
                rank2_alternating: false,
            });
        }
        if let Some(spec) = &self.corank2 {
            let alpha: Vec<usize> = spec
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse()
                        .map_err(|_| OmError::InvalidInput(format!("bad composition `{spec}`")))
                })
                .collect::<Result<_, _>>()?;
            report.record_source(json!({"corank2": alpha}));
            return Ok(LoadedMatroid {
                matroid: construct::corank2_family(&alpha)?,
                graphical: false,
                rank2_alternating: false,
            });
        }
        report.record_source(json!({"pentagon": true}));
        let (m, _) = pentagon_matroid();
        Ok(LoadedMatroid {
            matroid: m,
            graphical: false,
            rank2_alternating: false,
        })
    }
}

/// An exact rational realization of the pentagon-with-center oriented
/// matroid: five near-regular-pentagon vertices around the origin. The
/// rational perturbations are far too small to flip any of the circular
/// triple orientations, so the chirotope matches the regular pentagon's.
pub fn pentagon_matroid() -> (OrientedMatroid, VectorConfiguration) {
    let config = VectorConfiguration::new(
        3,
        vec![
            vec![rat(-951, 500), rat(-309, 500), rat_int(1)],
            vec![rat_int(0), rat_int(-2), rat_int(1)],
            vec![rat(951, 500), rat(-309, 500), rat_int(1)],
            vec![rat(147, 125), rat(809, 500), rat_int(1)],
            vec![rat(-147, 125), rat(809, 500), rat_int(1)],
            vec![rat_int(0), rat_int(0), rat_int(1)],
        ],
    );
    let m = construct::from_vectors(&config).expect("valid configuration");
    (m, config)
}

/// The published affine coordinates of the non-positroid used by the
/// worked bad-collection certificate.
pub fn ic_6_3_13() -> (OrientedMatroid, VectorConfiguration) {
    let config = VectorConfiguration::new(
        3,
        vec![
            vec![rat_int(0), rat_int(0), rat_int(1)],
            vec![rat_int(4), rat_int(0), rat_int(1)],
            vec![rat_int(3), rat_int(2), rat_int(1)],
            vec![rat_int(2), rat_int(4), rat_int(1)],
            vec![rat_int(1), rat_int(2), rat_int(1)],
            vec![rat_int(2), rat(4, 3), rat_int(1)],
        ],
    );
    let m = construct::from_vectors(&config).expect("valid configuration");
    (m, config)
}
