//! Table-of-12 statistics per construct kind.
//!
//! Depth and Length statistics are computed over the raw per-occurrence
//! multiset. Count statistics depend on the scope: at file scope they run
//! over occurrences-per-top-level-declaration (each top-level function or
//! class is one region, leftover observations form the file-level region);
//! at function/class scope the multiset is the singleton total. Kinds with
//! zero occurrences yield an all-zero block, and the standard deviation of
//! a sample with at most one element is zero. All deviations are population
//! deviations.

use super::emit::ConstructObservation;
use crate::taxonomy::{ConstructKind, KIND_COUNT, METRICS_PER_KIND};

/// The 12 statistics for one construct kind.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct StatBlock {
    pub max_count: f64,
    pub min_count: f64,
    pub avg_count: f64,
    pub std_dev_count: f64,
    pub max_depth: f64,
    pub min_depth: f64,
    pub avg_depth: f64,
    pub std_dev_depth: f64,
    pub max_length: f64,
    pub min_length: f64,
    pub avg_length: f64,
    pub std_dev_length: f64,
}

impl StatBlock {
    pub fn to_array(&self) -> [f64; METRICS_PER_KIND] {
        [
            self.max_count,
            self.min_count,
            self.avg_count,
            self.std_dev_count,
            self.max_depth,
            self.min_depth,
            self.avg_depth,
            self.std_dev_depth,
            self.max_length,
            self.min_length,
            self.avg_length,
            self.std_dev_length,
        ]
    }

    pub fn from_array(a: &[f64]) -> StatBlock {
        StatBlock {
            max_count: a[0],
            min_count: a[1],
            avg_count: a[2],
            std_dev_count: a[3],
            max_depth: a[4],
            min_depth: a[5],
            avg_depth: a[6],
            std_dev_depth: a[7],
            max_length: a[8],
            min_length: a[9],
            avg_length: a[10],
            std_dev_length: a[11],
        }
    }
}

/// Selects how Count statistics are formed.
#[derive(Debug, Clone)]
pub enum ScopeSelector<'a> {
    /// File scope: count multisets run over these top-level declaration
    /// spans plus a file-level region for leftover observations.
    File { top_level_decls: &'a [(usize, usize)] },
    /// Function or class scope: the count multiset is the singleton total.
    Declaration,
}

#[derive(Debug, Clone, Copy, Default)]
struct Moments {
    min: f64,
    max: f64,
    sum: f64,
    sum_sq: f64,
    n: usize,
}

impl Moments {
    fn push(&mut self, x: f64) {
        if self.n == 0 {
            self.min = x;
            self.max = x;
        } else {
            self.min = self.min.min(x);
            self.max = self.max.max(x);
        }
        self.sum += x;
        self.sum_sq += x * x;
        self.n += 1;
    }

    fn mean(&self) -> f64 {
        if self.n == 0 {
            0.0
        } else {
            self.sum / self.n as f64
        }
    }

    fn pop_std(&self) -> f64 {
        if self.n <= 1 {
            return 0.0;
        }
        let mean = self.mean();
        let var = (self.sum_sq / self.n as f64 - mean * mean).max(0.0);
        var.sqrt()
    }
}

/// Aggregates observations into one `StatBlock` per construct kind, in
/// taxonomy id order.
pub fn aggregate_stats(
    observations: &[ConstructObservation],
    scope: ScopeSelector<'_>,
) -> Vec<StatBlock> {
    let mut blocks = vec![StatBlock::default(); KIND_COUNT];

    // Depth and Length moments over the raw multiset.
    let mut depth_m = vec![Moments::default(); KIND_COUNT];
    let mut len_m = vec![Moments::default(); KIND_COUNT];
    for obs in observations {
        let k = obs.kind.id() as usize;
        depth_m[k].push(obs.depth as f64);
        len_m[k].push(obs.length as f64);
    }

    // Count moments over regions.
    let mut count_m = vec![Moments::default(); KIND_COUNT];
    match scope {
        ScopeSelector::Declaration => {
            let mut totals = [0usize; KIND_COUNT];
            for obs in observations {
                totals[obs.kind.id() as usize] += 1;
            }
            for (k, &t) in totals.iter().enumerate() {
                if t > 0 {
                    count_m[k].push(t as f64);
                }
            }
        }
        ScopeSelector::File { top_level_decls } => {
            let n_decls = top_level_decls.len();
            // counts[region][kind]; the extra region is the file-level one.
            let mut counts = vec![[0usize; KIND_COUNT]; n_decls + 1];
            let mut file_region_used = false;
            for obs in observations {
                let region = top_level_decls
                    .iter()
                    .position(|&(s, e)| obs.start >= s && obs.end() <= e)
                    .unwrap_or_else(|| {
                        file_region_used = true;
                        n_decls
                    });
                counts[region][obs.kind.id() as usize] += 1;
            }
            let regions = if file_region_used { n_decls + 1 } else { n_decls };
            for k in 0..KIND_COUNT {
                let total: usize = counts[..regions.max(1).min(counts.len())]
                    .iter()
                    .map(|c| c[k])
                    .sum();
                if total == 0 {
                    continue;
                }
                for region_counts in counts.iter().take(regions) {
                    count_m[k].push(region_counts[k] as f64);
                }
            }
        }
    }

    for k in 0..KIND_COUNT {
        if depth_m[k].n == 0 {
            continue; // absence convention: all-zero block
        }
        let b = &mut blocks[k];
        b.max_count = count_m[k].max;
        b.min_count = count_m[k].min;
        b.avg_count = count_m[k].mean();
        b.std_dev_count = count_m[k].pop_std();
        b.max_depth = depth_m[k].max;
        b.min_depth = depth_m[k].min;
        b.avg_depth = depth_m[k].mean();
        b.std_dev_depth = depth_m[k].pop_std();
        b.max_length = len_m[k].max;
        b.min_length = len_m[k].min;
        b.avg_length = len_m[k].mean();
        b.std_dev_length = len_m[k].pop_std();
    }
    blocks
}

/// Convenience for tests and oracles: blocks for a plain observation list by
/// kind, with explicit count multisets.
pub fn kind_observations(
    observations: &[ConstructObservation],
    kind: ConstructKind,
) -> Vec<ConstructObservation> {
    observations.iter().filter(|o| o.kind == kind).cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn obs(kind: ConstructKind, depth: usize, length: usize) -> ConstructObservation {
        ConstructObservation {
            kind,
            start: 0,
            length,
            depth,
            enclosing_function: None,
            enclosing_class: None,
        }
    }

    #[test]
    fn absent_kind_is_all_zero() {
        let blocks = aggregate_stats(&[], ScopeSelector::Declaration);
        assert_eq!(blocks.len(), KIND_COUNT);
        for b in &blocks {
            assert_eq!(*b, StatBlock::default());
        }
    }

    #[test]
    fn depth_stats_match_hand_computation() {
        // if-depths {1, 2}: max 2, min 1, avg 1.5, population std 0.5
        let list = vec![
            obs(ConstructKind::IfStatement, 1, 5),
            obs(ConstructKind::IfStatement, 2, 7),
        ];
        let blocks = aggregate_stats(&list, ScopeSelector::Declaration);
        let b = &blocks[ConstructKind::IfStatement.id() as usize];
        assert_eq!(b.max_depth, 2.0);
        assert_eq!(b.min_depth, 1.0);
        assert_eq!(b.avg_depth, 1.5);
        assert!((b.std_dev_depth - 0.5).abs() < 1e-12);
    }

    #[test]
    fn singleton_sample_has_zero_std() {
        let list = vec![obs(ConstructKind::Identifier, 3, 7)];
        let blocks = aggregate_stats(&list, ScopeSelector::Declaration);
        let b = &blocks[ConstructKind::Identifier.id() as usize];
        assert_eq!(b.max_length, 7.0);
        assert_eq!(b.min_length, 7.0);
        assert_eq!(b.avg_length, 7.0);
        assert_eq!(b.std_dev_length, 0.0);
        assert_eq!(b.avg_count, 1.0);
        assert_eq!(b.std_dev_count, 0.0);
    }

    #[test]
    fn file_scope_counts_run_over_regions() {
        // Two top-level decls; 3 ifs in the first, none in the second.
        let mut list = Vec::new();
        for i in 0..3 {
            let mut o = obs(ConstructKind::IfStatement, 2, 4);
            o.start = 10 + i;
            list.push(o);
        }
        let decls = [(0usize, 50usize), (50, 100)];
        let blocks = aggregate_stats(&list, ScopeSelector::File { top_level_decls: &decls });
        let b = &blocks[ConstructKind::IfStatement.id() as usize];
        assert_eq!(b.max_count, 3.0);
        assert_eq!(b.min_count, 0.0);
        assert_eq!(b.avg_count, 1.5);
        assert!((b.std_dev_count - 1.5).abs() < 1e-12);
    }

    #[test]
    fn file_region_collects_leftovers() {
        // One decl, one observation outside it.
        let mut inside = obs(ConstructKind::Comment, 1, 3);
        inside.start = 5;
        let mut outside = obs(ConstructKind::Comment, 0, 4);
        outside.start = 80;
        let decls = [(0usize, 50usize)];
        let blocks = aggregate_stats(
            &[inside, outside],
            ScopeSelector::File { top_level_decls: &decls },
        );
        let b = &blocks[ConstructKind::Comment.id() as usize];
        assert_eq!(b.max_count, 1.0);
        assert_eq!(b.min_count, 1.0);
        assert_eq!(b.avg_count, 1.0);
    }

    #[test]
    fn ordering_invariant() {
        let list = vec![
            obs(ConstructKind::ForLoop, 1, 10),
            obs(ConstructKind::ForLoop, 4, 2),
            obs(ConstructKind::ForLoop, 2, 6),
        ];
        let blocks = aggregate_stats(&list, ScopeSelector::Declaration);
        let b = &blocks[ConstructKind::ForLoop.id() as usize];
        assert!(b.min_depth <= b.avg_depth && b.avg_depth <= b.max_depth);
        assert!(b.min_length <= b.avg_length && b.avg_length <= b.max_length);
        assert!(b.std_dev_depth >= 0.0);
    }
}
