//! Built-in example documents, addressable from the command line as `@name`.

use crate::document::{parse_document, parse_triangulation, Document, TriangulationDocument};

const DOCUMENTS: &[(&str, &str)] = &[
    ("lens", include_str!("../corpus/lens.json")),
    ("order3", include_str!("../corpus/order3.json")),
    ("simplex", include_str!("../corpus/simplex.json")),
    ("quadrilateral", include_str!("../corpus/quadrilateral.json")),
    ("lens-skew", include_str!("../corpus/lens-skew.json")),
    ("cp2", include_str!("../corpus/cp2.json")),
    ("s2xs2", include_str!("../corpus/s2xs2.json")),
    ("cp2-3", include_str!("../corpus/cp2-3.json")),
    ("s2xs2-2", include_str!("../corpus/s2xs2-2.json")),
];

const TRIANGULATIONS: &[(&str, &str)] = &[
    ("quadrilateral-star", include_str!("../corpus/quadrilateral-star.json")),
    ("quadrilateral-flop", include_str!("../corpus/quadrilateral-flop.json")),
];

pub fn names() -> impl Iterator<Item = &'static str> {
    DOCUMENTS.iter().map(|(n, _)| *n)
}

/// Raw JSON of a document or triangulation.
pub fn text(name: &str) -> Option<&'static str> {
    DOCUMENTS.iter().chain(TRIANGULATIONS).find(|(n, _)| *n == name).map(|(_, t)| *t)
}

pub fn document(name: &str) -> Option<Document> {
    DOCUMENTS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| parse_document(t).expect("corpus documents parse"))
}

pub fn documents() -> Vec<(&'static str, Document)> {
    DOCUMENTS.iter().map(|(n, t)| (*n, parse_document(t).expect("corpus documents parse"))).collect()
}

pub fn triangulation(name: &str) -> Option<TriangulationDocument> {
    TRIANGULATIONS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| parse_triangulation(t).expect("corpus triangulations parse"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_parses() {
        assert_eq!(documents().len(), 9);
        for (name, doc) in documents() {
            assert_eq!(doc.name.as_deref(), Some(name));
        }
        assert!(triangulation("quadrilateral-flop").is_some());
        assert!(document("missing").is_none());
    }
}
