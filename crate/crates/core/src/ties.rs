use std::collections::HashMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// How equal-score candidates are resolved.
///
/// Candidates are identified by an integer key: a vertex id for the burning
/// heuristics, a flattened subset id for clustered coverage.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum TieBreak {
    /// Lowest key wins.
    #[default]
    SmallestIndex,
    /// Uniform choice among tied keys, reproducible from the seed.
    Seeded(u64),
    /// Keys earlier in the list win; unlisted keys rank after all listed ones,
    /// lowest key first.
    Preference(Vec<usize>),
}

/// Per-run tie resolver. A fresh one restarts the seeded stream.
pub(crate) struct Ties {
    kind: Kind,
}

enum Kind {
    Smallest,
    Random(Box<ChaCha8Rng>),
    Ranked(HashMap<usize, usize>),
}

impl Ties {
    pub(crate) fn new(policy: &TieBreak) -> Self {
        let kind = match policy {
            TieBreak::SmallestIndex => Kind::Smallest,
            TieBreak::Seeded(seed) => Kind::Random(Box::new(ChaCha8Rng::seed_from_u64(*seed))),
            TieBreak::Preference(order) => {
                let mut rank = HashMap::with_capacity(order.len());
                for (i, &key) in order.iter().enumerate() {
                    rank.entry(key).or_insert(i);
                }
                Kind::Ranked(rank)
            }
        };
        Ties { kind }
    }

    /// Picks one key from a nonempty, ascending candidate list.
    pub(crate) fn pick(&mut self, candidates: &[usize]) -> usize {
        debug_assert!(!candidates.is_empty());
        match &mut self.kind {
            Kind::Smallest => candidates[0],
            Kind::Random(rng) => {
                if candidates.len() == 1 {
                    candidates[0]
                } else {
                    candidates[rng.gen_range(0..candidates.len())]
                }
            }
            Kind::Ranked(rank) => *candidates
                .iter()
                .min_by_key(|&&c| (rank.get(&c).copied().unwrap_or(usize::MAX), c))
                .unwrap(),
        }
    }
}
