//! The four ways to combine multisets, and when two of them are similar.

use multilang::{CombineMode, Multiplicity, Multiset, SymString};

fn ms(pairs: &[(&str, Multiplicity)]) -> Multiset<SymString> {
    Multiset::from_counts(pairs.iter().map(|(w, k)| (SymString::terminals(w), k.clone())))
}

fn main() {
    let a = ms(&[("a", 2u32.into()), ("b", 1u32.into())]);
    let b = ms(&[("a", 1u32.into()), ("b", 3u32.into()), ("ab", Multiplicity::Infinite)]);

    for (name, mode) in [
        ("union", CombineMode::Union),
        ("intersection", CombineMode::Intersection),
        ("sum", CombineMode::Sum),
        ("product", CombineMode::Product),
    ] {
        println!("{name}:\n{}", a.combine(&b, mode));
    }

    // supports agree even though counts do not
    println!("union ~ sum: {}", a.union(&b).is_similar(&a.sum(&b)));
    println!("intersection ~ product: {}", a.intersection(&b).is_similar(&a.product(&b)));

    let words = ms(&[("a", 1u32.into()), ("b", 2u32.into())]);
    println!("concatenated with itself:\n{}", words.concat(&words));
    println!("up to length 2 of the star:\n{}", words.star(2));
}
