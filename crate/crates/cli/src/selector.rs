//! Class selectors for `count` and `rigid`.
//!
//! * `5` : every class of elements of order 5
//! * `c3` or `#3` : class id 3
//! * `2B` : atlas-style class name
//! * `order2size10` (or `order2-size10`) : classes of order 2 and size 10

use rigid_core::ClassTable;

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selector {
    Order(u64),
    Id(usize),
    Name(String),
    OrderSize { order: u64, size: usize },
}

impl Selector {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let bad = || CliError::Usage(format!("invalid class selector `{text}`"));
        if let Ok(order) = text.parse::<u64>() {
            return Ok(Selector::Order(order));
        }
        if let Some(id) = text.strip_prefix('c').or_else(|| text.strip_prefix('#')) {
            return id.parse().map(Selector::Id).map_err(|_| bad());
        }
        if let Some(rest) = text.strip_prefix("order") {
            let (order, size) = rest.split_once("size").ok_or_else(bad)?;
            let order = order.trim_end_matches('-').parse().map_err(|_| bad())?;
            let size = size.parse().map_err(|_| bad())?;
            return Ok(Selector::OrderSize { order, size });
        }
        let digits = text.chars().take_while(char::is_ascii_digit).count();
        let letters = &text[digits..];
        if digits > 0 && !letters.is_empty() && letters.chars().all(|c| c.is_ascii_uppercase()) {
            return Ok(Selector::Name(text.to_string()));
        }
        Err(bad())
    }

    pub fn is_order(&self) -> bool {
        matches!(self, Selector::Order(_))
    }

    /// Matching class ids in increasing order; never empty.
    pub fn resolve(&self, table: &ClassTable) -> Result<Vec<usize>, CliError> {
        let ids: Vec<usize> = match self {
            Selector::Order(m) => table.classes_of_element_order(*m),
            Selector::Id(k) => (*k < table.len()).then_some(vec![*k]).unwrap_or_default(),
            Selector::Name(name) => (0..table.len())
                .filter(|&c| table.class_name(c) == *name)
                .collect(),
            Selector::OrderSize { order, size } => table
                .classes()
                .iter()
                .filter(|c| c.element_order == *order && c.size() == *size)
                .map(|c| c.id)
                .collect(),
        };
        if ids.is_empty() {
            return Err(CliError::Usage(format!("no class matches {self:?}")));
        }
        Ok(ids)
    }
}

/// Every class tuple picking one match per selector, in lexicographic order.
pub fn expand(selectors: &[Selector], table: &ClassTable) -> Result<Vec<Vec<usize>>, CliError> {
    let mut tuples = vec![Vec::new()];
    for s in selectors {
        let ids = s.resolve(table)?;
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                ids.iter().map(move |&c| {
                    let mut t = t.clone();
                    t.push(c);
                    t
                })
            })
            .collect();
    }
    Ok(tuples)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsing() {
        assert_eq!(Selector::parse("5").unwrap(), Selector::Order(5));
        assert_eq!(Selector::parse("c3").unwrap(), Selector::Id(3));
        assert_eq!(Selector::parse("#0").unwrap(), Selector::Id(0));
        assert_eq!(Selector::parse("2B").unwrap(), Selector::Name("2B".into()));
        assert_eq!(
            Selector::parse("order2size10").unwrap(),
            Selector::OrderSize { order: 2, size: 10 }
        );
        assert_eq!(
            Selector::parse("order2-size10").unwrap(),
            Selector::OrderSize { order: 2, size: 10 }
        );
        for bad in ["", "x", "c", "2b", "order2", "orderXsize1"] {
            assert!(Selector::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn resolution() {
        let g = rigid_core::parse_group_spec("Sym(5)")
            .unwrap()
            .build(1000)
            .unwrap();
        let t = ClassTable::new(&g);
        let twos = Selector::Order(2).resolve(&t).unwrap();
        assert_eq!(twos.len(), 2);
        let small = Selector::OrderSize { order: 2, size: 10 }
            .resolve(&t)
            .unwrap();
        assert_eq!(small, Selector::Name("2A".into()).resolve(&t).unwrap());
        assert!(Selector::Order(7).resolve(&t).is_err());
        assert!(Selector::Id(99).resolve(&t).is_err());
        let tuples = expand(
            &[Selector::Order(2), Selector::Order(4), Selector::Order(5)],
            &t,
        )
        .unwrap();
        assert_eq!(tuples.len(), 2);
    }
}
