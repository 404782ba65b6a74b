use std::collections::HashMap;

use rayon::prelude::*;

use crate::hyperelliptic::HyperCanonicalizer;
use crate::trigonal::{normalization_count, trigonal_isomorphic, QuinticModel};

use super::{CensusError, Model};

/// Partition of `models` into isomorphism classes over GF(3^e), as lists of
/// positions. Classes are ordered by first occurrence and each lists its
/// members in input order, so the first member is the representative.
pub fn classify(models: &[Model], e: u32) -> Result<Vec<Vec<usize>>, CensusError> {
    let Some(first) = models.first() else {
        return Ok(Vec::new());
    };
    if models.iter().any(|m| m.family() != first.family()) {
        return Err(CensusError::InvalidModel("cannot classify a mixed list of families".into()));
    }
    match first {
        Model::Hyperelliptic(_) => {
            let canon = HyperCanonicalizer::new(e)?;
            let keys: Vec<[u32; 13]> = models
                .par_iter()
                .map(|m| match m {
                    Model::Hyperelliptic(h) => canon.canonical_key(h),
                    Model::Trigonal(_) => unreachable!(),
                })
                .collect();
            Ok(group_by_key(&keys))
        }
        Model::Trigonal(_) => {
            let quintics: Vec<QuinticModel> = models
                .iter()
                .map(|m| match m {
                    Model::Trigonal(t) => *t,
                    Model::Hyperelliptic(_) => unreachable!(),
                })
                .collect();
            classify_trigonal(&quintics, e)
        }
    }
}

fn group_by_key<K: std::hash::Hash + Eq + Clone>(keys: &[K]) -> Vec<Vec<usize>> {
    let mut slot: HashMap<K, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, k) in keys.iter().enumerate() {
        let id = *slot.entry(k.clone()).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[id].push(i);
    }
    classes
}

/// Greedy first-occurrence classification, comparing only models with
/// equal point counts over the first three extensions.
fn classify_trigonal(models: &[QuinticModel], e: u32) -> Result<Vec<Vec<usize>>, CensusError> {
    let buckets: Vec<Vec<u64>> = models
        .par_iter()
        .map(|m| (1..=3).map(|k| normalization_count(m, e * k)).collect())
        .collect::<Result<_, _>>()?;
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, m) in models.iter().enumerate() {
        let mut home = None;
        for (id, cl) in classes.iter().enumerate() {
            let rep = cl[0];
            if buckets[rep] == buckets[i] && trigonal_isomorphic(&models[rep], m, e)? {
                home = Some(id);
                break;
            }
        }
        match home {
            Some(id) => classes[id].push(i),
            None => classes.push(vec![i]),
        }
    }
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperelliptic::HyperModel;
    use crate::trigonal::all_cases;

    #[test]
    fn singleton_and_empty() {
        assert!(classify(&[], 1).unwrap().is_empty());
        let m = Model::Trigonal(all_cases()[0].model(5));
        assert_eq!(classify(&[m], 1).unwrap(), vec![vec![0]]);
    }

    #[test]
    fn mixed_families_rejected() {
        let h = Model::Hyperelliptic(HyperModel::at(0).unwrap());
        let t = Model::Trigonal(all_cases()[0].model(0));
        assert!(matches!(classify(&[h, t], 1), Err(CensusError::InvalidModel(_))));
    }
}
