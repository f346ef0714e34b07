use serde::{Deserialize, Serialize};

use super::AtomRecord;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub atom: AtomRecord,
}

/// Named atoms, distinct by name.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomCatalog {
    pub entries: Vec<CatalogEntry>,
}

impl AtomCatalog {
    pub fn get(&self, name: &str) -> Option<&AtomRecord> {
        self.entries
            .iter()
            .find(|e| e.name == name)
            .map(|e| &e.atom)
    }

    /// Zero-dimensional entries: the basis for point decompositions.
    pub fn point_atoms(&self) -> Vec<&CatalogEntry> {
        self.entries
            .iter()
            .filter(|e| e.atom.hodge_poly.terms().all(|(k, _)| k == 0))
            .collect()
    }

    fn push(&mut self, name: String, atom: AtomRecord) {
        debug_assert!(self.get(&name).is_none());
        self.entries.push(CatalogEntry { name, atom });
    }
}

/// Atoms of points and curves with a `Z/p` action, curves of genus
/// `1..=max_genus`. A rational curve splits into two point atoms and so
/// has no entry of its own.
pub fn catalog_low_dim(p: u32, max_genus: u32) -> AtomCatalog {
    let mut cat = AtomCatalog::default();
    cat.push("point".into(), AtomRecord::trivial_point());
    let orbit = if p == 2 {
        "two points".to_string()
    } else {
        format!("free orbit of {p} points")
    };
    cat.push(orbit, AtomRecord::free_orbit_point(p));
    for g in 1..=max_genus {
        let curve = if g == 1 {
            "elliptic curve".to_string()
        } else {
            format!("curve of genus {g}")
        };
        cat.push(curve.clone(), AtomRecord::trivial_curve(g, None));
        cat.push(
            format!("{curve}, nontrivial action"),
            AtomRecord::nontrivial_curve(g, None),
        );
        cat.push(
            format!("free orbit of {p} copies of {curve}"),
            AtomRecord::free_orbit_curve(p, g),
        );
    }
    cat
}
