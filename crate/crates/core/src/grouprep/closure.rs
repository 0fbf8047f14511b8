use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

use super::{GroupError, Matrix, Permutation};

/// Minimal interface for elements of a finite group given concretely.
pub trait GroupElement: Clone + Eq + Hash {
    /// The product `self · other`.
    fn op(&self, other: &Self) -> Self;
}

impl GroupElement for Matrix {
    fn op(&self, other: &Self) -> Self {
        self.mul(other)
    }
}

impl GroupElement for Permutation {
    fn op(&self, other: &Self) -> Self {
        self.compose(other)
    }
}

/// A finite group enumerated from generators, each element carrying a
/// shortest word in the generators.
#[derive(Clone, Debug)]
pub struct LabeledGroup<T: GroupElement> {
    gen_names: Vec<String>,
    gens: Vec<T>,
    elements: Vec<T>,
    words: Vec<Vec<usize>>,
    index: HashMap<T, usize>,
    /// `right[e][g]` is the index of `elements[e] · gens[g]`.
    right: Vec<Vec<usize>>,
}

/// Breadth-first closure under right multiplication by the generators.
/// Element 0 is the identity.
pub fn closure<T: GroupElement>(
    gens: &[T],
    gen_names: &[&str],
    identity: T,
    cap: usize,
) -> Result<LabeledGroup<T>, GroupError> {
    assert_eq!(gens.len(), gen_names.len(), "one name per generator");
    let mut elements = vec![identity.clone()];
    let mut words: Vec<Vec<usize>> = vec![vec![]];
    let mut index = HashMap::new();
    index.insert(identity, 0usize);
    let mut right: Vec<Vec<usize>> = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(e) = queue.pop_front() {
        let mut row = Vec::with_capacity(gens.len());
        for (gi, g) in gens.iter().enumerate() {
            let p = elements[e].op(g);
            let idx = match index.get(&p) {
                Some(&i) => i,
                None => {
                    if elements.len() >= cap {
                        return Err(GroupError::NotClosed { cap });
                    }
                    let i = elements.len();
                    let mut w = words[e].clone();
                    w.push(gi);
                    elements.push(p.clone());
                    words.push(w);
                    index.insert(p, i);
                    queue.push_back(i);
                    i
                }
            };
            row.push(idx);
        }
        if right.len() <= e {
            right.resize(e + 1, Vec::new());
        }
        right[e] = row;
    }
    Ok(LabeledGroup {
        gen_names: gen_names.iter().map(|s| s.to_string()).collect(),
        gens: gens.to_vec(),
        elements,
        words,
        index,
        right,
    })
}

impl<T: GroupElement> LabeledGroup<T> {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &T {
        &self.elements[i]
    }

    pub fn generators(&self) -> &[T] {
        &self.gens
    }

    pub fn gen_names(&self) -> &[String] {
        &self.gen_names
    }

    pub fn identity(&self) -> &T {
        &self.elements[0]
    }

    pub fn index_of(&self, x: &T) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn word(&self, i: usize) -> &[usize] {
        &self.words[i]
    }

    /// Word rendered with generator names, e.g. `b*c*c`; `1` for the identity.
    pub fn word_string(&self, i: usize) -> String {
        if self.words[i].is_empty() {
            return "1".to_string();
        }
        self.words[i]
            .iter()
            .map(|&g| self.gen_names[g].as_str())
            .collect::<Vec<_>>()
            .join("*")
    }

    pub fn mul_index(&self, a: usize, b: usize) -> usize {
        let p = self.elements[a].op(&self.elements[b]);
        self.index[&p]
    }

    pub fn element_order(&self, i: usize) -> usize {
        let mut k = 1;
        let mut cur = i;
        while cur != 0 {
            cur = self.mul_index(cur, i);
            k += 1;
        }
        k
    }

    /// Indices of elements commuting with every generator.
    pub fn center(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&i| {
                self.gens
                    .iter()
                    .all(|g| self.elements[i].op(g) == g.op(&self.elements[i]))
            })
            .collect()
    }

    /// Checks that every word evaluates to its element.
    pub fn words_consistent(&self) -> bool {
        self.words.iter().enumerate().all(|(i, w)| {
            let v = w
                .iter()
                .fold(self.elements[0].clone(), |acc, &g| acc.op(&self.gens[g]));
            v == self.elements[i]
        })
    }

    /// Extends generator images along the Cayley graph. Returns the image of
    /// every element, or the first element receiving two different images.
    pub fn extend_map<U: GroupElement>(&self, images: &[U], identity: U) -> Result<Vec<U>, usize> {
        assert_eq!(images.len(), self.gens.len(), "one image per generator");
        let mut out: Vec<Option<U>> = vec![None; self.order()];
        out[0] = Some(identity);
        for e in 0..self.order() {
            let src = out[e].clone().expect("BFS order assigns parents first");
            for (g, img) in images.iter().enumerate() {
                let t = self.right[e][g];
                let v = src.op(img);
                match &out[t] {
                    Some(prev) if *prev != v => return Err(t),
                    Some(_) => {}
                    None => out[t] = Some(v),
                }
            }
        }
        Ok(out.into_iter().map(|x| x.expect("connected")).collect())
    }
}
