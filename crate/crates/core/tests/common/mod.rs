#![allow(dead_code)]

use std::sync::{Arc, OnceLock};

use icphi::{build_corpus, Corpus, FiniteGroup, GroupRecipe, Permutation};

pub fn corpus(max_order: usize) -> &'static Corpus {
    static C32: OnceLock<Corpus> = OnceLock::new();
    static C64: OnceLock<Corpus> = OnceLock::new();
    match max_order {
        32 => C32.get_or_init(|| build_corpus(32).unwrap()),
        64 => C64.get_or_init(|| build_corpus(64).unwrap()),
        _ => panic!("no cached corpus for {max_order}"),
    }
}

pub fn members(max_order: usize, up_to: usize) -> impl Iterator<Item = &'static Arc<FiniteGroup>> {
    corpus(max_order)
        .iter()
        .map(|e| &e.group)
        .filter(move |g| g.order() <= up_to)
}

pub fn group(recipe: &str) -> Arc<FiniteGroup> {
    let r: GroupRecipe = recipe.parse().unwrap();
    Arc::new(r.materialize().unwrap())
}

/// The relabeling `i -> 1 - i mod degree`.
pub fn shuffle(degree: usize) -> Permutation {
    let images: Vec<usize> = (0..degree).map(|i| (degree + 1 - i) % degree).collect();
    Permutation::from_images(&images).unwrap()
}
