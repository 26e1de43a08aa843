//! JSON file formats for algebras and modules.
//!
//! `algebra.json` carries either raw structure constants or a bound-quiver
//! presentation; `module.json` carries a side flag and one integer action
//! grid per algebra basis element. Loading validates everything through the
//! ordinary constructors, and `load(save(load(x)))` is the identity.

use crate::algebra::{Algebra, QuiverPresentation};
use crate::error::Error;
use crate::linalg::Mat;
use crate::module::{Module, Side};
use crate::Result;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum AlgebraFile {
    Structconst {
        p: u32,
        basis_labels: Vec<String>,
        structconst: Vec<Vec<Vec<i64>>>,
        unit: Vec<i64>,
        #[serde(skip_serializing_if = "Option::is_none")]
        radical_basis: Option<Vec<Vec<i64>>>,
    },
    Quiver {
        p: u32,
        vertices: usize,
        arrows: Vec<(usize, usize)>,
        relations: Vec<Vec<RelationTerm>>,
    },
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct RelationTerm {
    pub coeff: i64,
    pub path: Vec<usize>,
}

impl AlgebraFile {
    pub fn build(&self) -> Result<Arc<Algebra>> {
        match self {
            AlgebraFile::Structconst {
                p,
                basis_labels,
                structconst,
                unit,
                radical_basis,
            } => Algebra::from_structconst(
                *p,
                basis_labels.clone(),
                structconst.clone(),
                unit.clone(),
                radical_basis.clone(),
            ),
            AlgebraFile::Quiver {
                p,
                vertices,
                arrows,
                relations,
            } => Algebra::from_quiver_over(
                *p,
                QuiverPresentation {
                    vertices: *vertices,
                    arrows: arrows.clone(),
                    relations: relations
                        .iter()
                        .map(|rel| rel.iter().map(|t| (t.coeff, t.path.clone())).collect())
                        .collect(),
                },
            ),
        }
    }

    /// The canonical file form of an algebra: residues are reduced mod p, so
    /// saving and re-loading is the identity.
    pub fn from_algebra(a: &Algebra) -> AlgebraFile {
        match a.provenance() {
            Some(q) => AlgebraFile::Quiver {
                p: a.prime(),
                vertices: q.vertices,
                arrows: q.arrows.clone(),
                relations: q
                    .relations
                    .iter()
                    .map(|rel| {
                        rel.iter()
                            .map(|(c, path)| RelationTerm {
                                coeff: c.rem_euclid(i64::from(a.prime())),
                                path: path.clone(),
                            })
                            .collect()
                    })
                    .collect(),
            },
            None => {
                let d = a.dim();
                AlgebraFile::Structconst {
                    p: a.prime(),
                    basis_labels: a.basis_labels().to_vec(),
                    structconst: (0..d)
                        .map(|i| {
                            (0..d)
                                .map(|j| {
                                    (0..d).map(|k| i64::from(a.structconst(i, j, k))).collect()
                                })
                                .collect()
                        })
                        .collect(),
                    unit: a.unit().iter().map(|&v| i64::from(v)).collect(),
                    radical_basis: a.radical().map(|r| {
                        (0..r.dim())
                            .map(|i| r.basis().row(i).iter().map(|&v| i64::from(v)).collect())
                            .collect()
                    }),
                }
            }
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct ModuleFile {
    pub side: String,
    pub dim: usize,
    /// One `dim × dim` integer grid per algebra basis element.
    pub action: Vec<Vec<Vec<i64>>>,
}

impl ModuleFile {
    pub fn build(&self, algebra: &Arc<Algebra>) -> Result<Arc<Module>> {
        let side = parse_side(&self.side)?;
        if self.action.len() != algebra.dim() {
            return Err(Error::BadFile(format!(
                "module has {} action grids, algebra dimension is {}",
                self.action.len(),
                algebra.dim()
            )));
        }
        let mut mats = Vec::with_capacity(self.action.len());
        for (b, grid) in self.action.iter().enumerate() {
            if grid.len() != self.dim || grid.iter().any(|r| r.len() != self.dim) {
                return Err(Error::BadFile(format!(
                    "action grid {b} is not {0}x{0}",
                    self.dim
                )));
            }
            mats.push(Mat::from_rows(algebra.prime(), grid));
        }
        Module::new(Arc::clone(algebra), side, mats)
    }

    pub fn from_module(m: &Module) -> ModuleFile {
        ModuleFile {
            side: m.side().as_str().to_string(),
            dim: m.dim(),
            action: (0..m.algebra().dim())
                .map(|b| {
                    let mat = m.action(b);
                    (0..m.dim())
                        .map(|i| (0..m.dim()).map(|j| i64::from(mat.raw(i, j))).collect())
                        .collect()
                })
                .collect(),
        }
    }
}

pub fn parse_side(s: &str) -> Result<Side> {
    match s {
        "left" => Ok(Side::Left),
        "right" => Ok(Side::Right),
        other => Err(Error::BadFile(format!(
            "side must be \"left\" or \"right\", got \"{other}\""
        ))),
    }
}

pub fn load_algebra(path: &str) -> Result<Arc<Algebra>> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::BadFile(format!("{path}: {e}")))?;
    let file: AlgebraFile =
        serde_json::from_str(&text).map_err(|e| Error::BadFile(format!("{path}: {e}")))?;
    file.build()
}

pub fn load_module(path: &str, algebra: &Arc<Algebra>) -> Result<Arc<Module>> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::BadFile(format!("{path}: {e}")))?;
    let file: ModuleFile =
        serde_json::from_str(&text).map_err(|e| Error::BadFile(format!("{path}: {e}")))?;
    file.build(algebra)
}

pub fn save_algebra(a: &Algebra) -> String {
    serde_json::to_string_pretty(&AlgebraFile::from_algebra(a)).expect("serialization")
}

pub fn save_module(m: &Module) -> String {
    serde_json::to_string_pretty(&ModuleFile::from_module(m)).expect("serialization")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::examples;

    #[test]
    fn algebra_round_trip_structconst() {
        let a = examples::dual_numbers(2);
        let text = save_algebra(&a);
        let file: AlgebraFile = serde_json::from_str(&text).unwrap();
        let a2 = file.build().unwrap();
        assert_eq!(*a, *a2);
        // save -> load -> save is byte identical.
        assert_eq!(text, save_algebra(&a2));
    }

    #[test]
    fn algebra_round_trip_quiver() {
        let a = examples::linear_quiver(2, 3);
        let text = save_algebra(&a);
        let file: AlgebraFile = serde_json::from_str(&text).unwrap();
        let a2 = file.build().unwrap();
        assert_eq!(*a, *a2);
        assert_eq!(text, save_algebra(&a2));
    }

    #[test]
    fn module_round_trip() {
        let a = examples::dual_numbers(2);
        let m = Module::regular(Arc::clone(&a), Side::Left);
        let text = save_module(&m);
        let file: ModuleFile = serde_json::from_str(&text).unwrap();
        let m2 = file.build(&a).unwrap();
        assert_eq!(text, save_module(&m2));
    }

    #[test]
    fn invalid_module_rejected() {
        let a = examples::dual_numbers(2);
        let file = ModuleFile {
            side: "left".into(),
            dim: 1,
            action: vec![vec![vec![1]], vec![vec![1]]], // eps acting as 1 is not a module
        };
        assert!(file.build(&a).is_err());
        let bad_side = ModuleFile {
            side: "sideways".into(),
            dim: 0,
            action: vec![vec![], vec![]],
        };
        assert!(bad_side.build(&a).is_err());
    }
}
