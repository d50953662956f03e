use std::collections::HashSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::field::FieldSpec;
use crate::monomial::MonomialOrder;

/// A standard graded polynomial ring `K[x_1, ..., x_n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PolyRing {
    field: FieldSpec,
    order: MonomialOrder,
    var_names: Vec<String>,
}

impl PolyRing {
    pub fn new<S: AsRef<str>>(field: FieldSpec, var_names: &[S]) -> Result<Arc<Self>> {
        Self::with_order(field, var_names, MonomialOrder::Degrevlex)
    }

    pub fn with_order<S: AsRef<str>>(
        field: FieldSpec,
        var_names: &[S],
        order: MonomialOrder,
    ) -> Result<Arc<Self>> {
        let names: Vec<String> = var_names.iter().map(|s| s.as_ref().to_string()).collect();
        let mut seen = HashSet::new();
        for name in &names {
            if name.is_empty() {
                return Err(AlgebraError::InvalidRing("empty variable name".into()));
            }
            if !seen.insert(name.as_str()) {
                return Err(AlgebraError::InvalidRing(format!("duplicate variable {name}")));
            }
        }
        if order == MonomialOrder::EliminateFirst && names.is_empty() {
            return Err(AlgebraError::InvalidRing("elimination order needs a variable".into()));
        }
        Ok(Arc::new(PolyRing { field, order, var_names: names }))
    }

    /// Ring with variables `x1, ..., xn`.
    pub fn standard(field: FieldSpec, n: usize) -> Arc<Self> {
        let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        Self::new(field, &names).expect("generated names are distinct")
    }

    pub fn nvars(&self) -> usize {
        self.var_names.len()
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.var_names.iter().position(|v| v == name)
    }

    /// The ring obtained by deleting variable `k`.
    pub fn without_var(&self, k: usize) -> Arc<Self> {
        let mut names = self.var_names.clone();
        names.remove(k);
        let order = if self.order == MonomialOrder::EliminateFirst { MonomialOrder::Degrevlex } else { self.order };
        Arc::new(PolyRing { field: self.field.clone(), order, var_names: names })
    }

    /// The ring with a fresh tag variable prepended and the elimination order.
    pub(crate) fn with_tag_variable(&self) -> Arc<Self> {
        let mut tag = String::from("_t");
        while self.var_names.contains(&tag) {
            tag.push('_');
        }
        let mut names = vec![tag];
        names.extend(self.var_names.iter().cloned());
        Arc::new(PolyRing { field: self.field.clone(), order: MonomialOrder::EliminateFirst, var_names: names })
    }
}

pub(crate) fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

pub(crate) fn check_same(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> Result<()> {
    if same_ring(a, b) {
        Ok(())
    } else {
        Err(AlgebraError::RingMismatch)
    }
}
