use std::cmp::Ordering;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum OrderKind {
    Lex,
    GrLex,
}

/// Monomial order: `priority[0]` is the largest variable.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub priority: Vec<usize>,
}

impl MonomialOrder {
    pub fn lex(n: usize) -> Self {
        MonomialOrder { kind: OrderKind::Lex, priority: (0..n).collect() }
    }

    pub fn grlex(n: usize) -> Self {
        MonomialOrder { kind: OrderKind::GrLex, priority: (0..n).collect() }
    }

    pub fn with_priority(kind: OrderKind, priority: Vec<usize>) -> Self {
        let mut seen = priority.clone();
        seen.sort_unstable();
        assert!(seen.iter().enumerate().all(|(i, &v)| i == v), "priority must be a permutation");
        MonomialOrder { kind, priority }
    }

    pub fn arity(&self) -> usize {
        self.priority.len()
    }

    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        if self.kind == OrderKind::GrLex {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            if da != db {
                return da.cmp(&db);
            }
        }
        for &v in &self.priority {
            match a[v].cmp(&b[v]) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        let lex = MonomialOrder::lex(2);
        assert_eq!(lex.cmp(&[1, 0], &[0, 5]), Ordering::Greater);
        let gr = MonomialOrder::grlex(2);
        assert_eq!(gr.cmp(&[1, 0], &[0, 5]), Ordering::Less);
        let rev = MonomialOrder::with_priority(OrderKind::Lex, vec![1, 0]);
        assert_eq!(rev.cmp(&[1, 0], &[0, 1]), Ordering::Less);
        assert_eq!(lex.cmp(&[0, 0], &[0, 1]), Ordering::Less);
    }
}
