use std::collections::BTreeSet;
use tessgrowth::classify::{classify, Morphism};
use tessgrowth::cyclic::*;

fn main() {
    let mut canon: BTreeSet<CyclicSequence> = BTreeSet::new();
    for k in 3usize..=6 {
        let mut w = vec![3u32; k];
        'l: loop {
            canon.insert(canonicalize(&w).unwrap());
            for i in (0..k).rev() {
                if w[i] < 10 { w[i] += 1; for x in w[i+1..].iter_mut() { *x = 3; } continue 'l; }
            }
            break;
        }
    }
    let mut shapes: BTreeSet<String> = BTreeSet::new();
    for s in &canon {
        if growth_class(s) != GrowthClass::Hyperbolic { continue; }
        if realizability_check(s) != Realizability::Ok { continue; }
        if classify(s).morphism == Morphism::Unknown {
            // shape key: map values to letters in order of appearance, 3 stays 3
            let mut map = std::collections::BTreeMap::new();
            let mut next = b'p';
            let shape: String = s.terms().iter().map(|&t| {
                if t == 3 { '3' } else {
                    *map.entry(t).or_insert_with(|| { let c = next as char; next += 1; c })
                }
            }).collect();
            if shapes.insert(shape.clone()) {
                println!("{shape}  e.g. {s}");
            }
        }
    }
}
