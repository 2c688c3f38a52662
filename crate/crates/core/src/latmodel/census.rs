//! Partition of the points of a window into Schubert cells.

use super::chain::LatticeChain;
use super::enumerate::enumerate_points;
use super::iwahori::iwahori_generators;
use super::relpos::relative_position_to_base;
use super::window::{ModelCtx, ModelWindow};
use crate::error::Result;
use crate::gfring::Submodule;
use crate::weyl::{GroupCtx, WeylElement};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusOptions {
    pub budget: u128,
    pub generators: usize,
    pub seed: u64,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions { budget: 1 << 24, generators: 3, seed: 1 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub label: WeylElement,
    pub word: String,
    pub length: usize,
    pub size: usize,
    /// Indices into [`Census::points`].
    pub members: Vec<usize>,
    /// Orbits of the sampled generators inside the cell.
    pub orbit_components: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureReport {
    pub generators: usize,
    pub violations: Vec<String>,
}

impl ClosureReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct Census {
    pub window: ModelWindow,
    pub points: Vec<LatticeChain>,
    pub labels: Vec<WeylElement>,
    pub cells: Vec<Cell>,
    pub closure: ClosureReport,
}

impl Census {
    pub fn total(&self) -> usize {
        self.points.len()
    }

    pub fn sizes(&self) -> BTreeMap<WeylElement, usize> {
        self.cells.iter().map(|c| (c.label.clone(), c.size)).collect()
    }

    pub fn cell(&self, w: &WeylElement) -> Option<&Cell> {
        self.cells.iter().find(|c| &c.label == w)
    }
}

fn find(p: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while p[r] != r {
        r = p[r];
    }
    let mut y = x;
    while p[y] != r {
        let next = p[y];
        p[y] = r;
        y = next;
    }
    r
}

pub fn cell_census(ctx: &ModelCtx, group: &GroupCtx, opts: &CensusOptions) -> Result<Census> {
    let points = enumerate_points(ctx, opts.budget)?;
    let labels: Vec<WeylElement> = points.par_iter().map(|p| relative_position_to_base(ctx, p)).collect::<Result<_>>()?;
    let index: HashMap<&[Submodule], usize> = points.iter().enumerate().map(|(i, p)| (p.members.as_slice(), i)).collect();
    let mut parent: Vec<usize> = (0..points.len()).collect();
    let mut closure = ClosureReport { generators: opts.generators, violations: Vec::new() };
    if opts.generators > 0 && !points.is_empty() {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let h = ctx.ring.width();
        let gens = iwahori_generators(ctx.field.clone(), ctx.window.d, h, opts.generators, &mut rng)?;
        for (k, g) in gens.iter().enumerate() {
            let images: Vec<Result<Vec<Submodule>>> =
                points.par_iter().map(|p| p.members.iter().map(|l| l.apply_matrix(g)).collect()).collect();
            for (i, img) in images.into_iter().enumerate() {
                let img = img?;
                match index.get(img.as_slice()) {
                    None => closure.violations.push(format!("generator {k} moves point {i} out of the window")),
                    Some(&j) => {
                        if labels[j] != labels[i] {
                            closure.violations.push(format!("generator {k} moves point {i} from cell {} to {}", labels[i], labels[j]));
                        }
                        let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                        if a != b {
                            parent[a.max(b)] = a.min(b);
                        }
                    }
                }
            }
        }
    }
    let mut by_label: BTreeMap<WeylElement, Vec<usize>> = BTreeMap::new();
    for (i, l) in labels.iter().enumerate() {
        by_label.entry(l.clone()).or_default().push(i);
    }
    let mut cells: Vec<Cell> = by_label
        .into_iter()
        .map(|(label, members)| {
            let mut roots: Vec<usize> = members.iter().map(|&i| find(&mut parent, i)).collect();
            roots.sort_unstable();
            roots.dedup();
            Cell {
                word: group.word_string(&label),
                length: group.length(&label),
                size: members.len(),
                orbit_components: if opts.generators > 0 { roots.len() } else { 0 },
                label,
                members,
            }
        })
        .collect();
    cells.sort_by(|a, b| (a.length, &a.word).cmp(&(b.length, &b.word)));
    Ok(Census { window: ctx.window, points, labels, cells, closure })
}
