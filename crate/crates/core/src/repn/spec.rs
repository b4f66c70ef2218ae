use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix};

use super::Module;

/// Module input format.
///
/// `Representation` lists a matrix per arrow (path algebras only);
/// `Generic` lists a block per algebra basis element. Matrices act on row
/// vectors: the block of an arrow `i → j` has `dims[i]` rows and `dims[j]` columns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ModuleSpec {
    Representation { dims: Vec<usize>, arrows: BTreeMap<String, Vec<Vec<i64>>> },
    Generic { dims: Vec<usize>, action: Vec<Vec<Vec<i64>>> },
}

fn block(field: Field, rows: usize, cols: usize, data: &[Vec<i64>], what: &str) -> Result<Matrix> {
    let bad = || Error::InvalidModule(format!("matrix for `{what}` should be {rows}x{cols}"));
    // an empty list stands for the map to or from a zero space
    if rows == 0 || (cols == 0 && data.is_empty()) {
        return if data.is_empty() { Ok(Matrix::zeros(field, rows, cols)) } else { Err(bad()) };
    }
    if data.len() != rows || data.iter().any(|r| r.len() != cols) {
        return Err(bad());
    }
    let mut m = Matrix::zeros(field, rows, cols);
    for (i, r) in data.iter().enumerate() {
        for (j, &x) in r.iter().enumerate() {
            m.set(i, j, field.from_i64(x));
        }
    }
    Ok(m)
}

impl ModuleSpec {
    pub fn build(&self, a: &Arc<Algebra>) -> Result<Module> {
        let field = a.field();
        match self {
            ModuleSpec::Representation { dims, arrows } => {
                let q = a
                    .quiver()
                    .ok_or_else(|| Error::InvalidModule("arrow matrices need a path algebra".into()))?;
                if dims.len() != q.num_vertices() {
                    return Err(Error::InvalidModule("dimension vector has the wrong length".into()));
                }
                for name in arrows.keys() {
                    if q.arrow_index(name).is_none() {
                        return Err(Error::InvalidModule(format!("unknown arrow `{name}`")));
                    }
                }
                let mats: Vec<Matrix> = (0..q.num_arrows())
                    .map(|k| {
                        let (s, t) = (q.source(k), q.target(k));
                        let name = &q.arrows()[k].name;
                        match arrows.get(name) {
                            Some(data) => block(field, dims[s], dims[t], data, name),
                            None => Ok(Matrix::zeros(field, dims[s], dims[t])),
                        }
                    })
                    .collect::<Result<_>>()?;
                let action = (0..a.dim())
                    .map(|b| {
                        let (s, _) = a.pointing(b);
                        let word = a.path_word(b).expect("path algebra");
                        word.iter().fold(Matrix::identity(field, dims[s]), |acc, &k| acc.mul(&mats[k]))
                    })
                    .collect();
                Module::new(a.clone(), dims.clone(), action)
            }
            ModuleSpec::Generic { dims, action } => {
                if dims.len() != a.num_vertices() || action.len() != a.dim() {
                    return Err(Error::InvalidModule("dimension vector or action list has the wrong length".into()));
                }
                let mats = action
                    .iter()
                    .enumerate()
                    .map(|(b, data)| {
                        let (s, t) = a.pointing(b);
                        block(field, dims[s], dims[t], data, &a.labels()[b])
                    })
                    .collect::<Result<_>>()?;
                Module::new(a.clone(), dims.clone(), mats)
            }
        }
    }

    /// Generic description of any module (entries as representatives in `[0, p)`).
    pub fn from_module(m: &Module) -> ModuleSpec {
        let action = m
            .actions()
            .iter()
            .map(|x| x.row_vecs().into_iter().map(|r| r.into_iter().map(i64::from).collect()).collect())
            .collect();
        ModuleSpec::Generic { dims: m.dims().to_vec(), action }
    }
}
