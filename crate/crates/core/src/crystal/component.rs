use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;

use super::{materialize, Crystal, CrystalGraph};
use crate::error::{Error, Result};
use crate::rootdata::ExtInt;

/// A connected component together with the ambient elements behind each handle.
#[derive(Debug, Clone)]
pub struct Component<E> {
    pub graph: CrystalGraph,
    pub elems: Vec<E>,
}

/// Breadth-first closure of a highest weight seed under every Ẽ_i and F̃_i.
/// Handle 0 is the seed; neighbours are visited F̃ before Ẽ, in index order.
pub fn highest_weight_component<C: Crystal>(ambient: &C, seed: C::Elem, cap: usize) -> Result<Component<C::Elem>> {
    let r = ambient.datum().rank();
    if let Some(i) = (0..r).find(|&i| ambient.eps(&seed, i) != ExtInt::Fin(0)) {
        return Err(Error::NotHighestWeight(alloc::format!(
            "ε_{}({}) = {}",
            ambient.datum().label(i),
            ambient.name(&seed),
            ambient.eps(&seed, i)
        )));
    }
    let mut seen: BTreeMap<C::Elem, usize> = BTreeMap::new();
    let mut elems = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(seed.clone(), 0);
    elems.push(seed.clone());
    queue.push_back(seed);
    while let Some(x) = queue.pop_front() {
        let nbrs = (0..r).map(|i| ambient.f(&x, i)).chain((0..r).map(|i| ambient.e(&x, i)));
        for y in nbrs.flatten() {
            if !seen.contains_key(&y) {
                if elems.len() >= cap {
                    return Err(Error::CapExceeded(cap));
                }
                seen.insert(y.clone(), elems.len());
                elems.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    let graph = materialize(ambient, &elems)?;
    Ok(Component { graph, elems })
}
