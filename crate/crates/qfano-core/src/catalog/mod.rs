//! Every defining polynomial, matrix, substitution, weight table and class
//! record, constructed programmatically over one shared variable universe
//! and exposed immutably.

pub mod actions;
pub mod classes;
pub mod fraction;
pub mod h13;
pub mod isom;
pub mod pi;
pub mod sections;
pub mod vars;

pub use actions::{gl2_action, ActionTarget, CovarianceRule, GL2Action};
pub use classes::{all_classes, fano_class, BasketPoint, CatalogError, FanoClass, CLASS_NUMBERS};
pub use fraction::Fraction;
pub use h13::{build_h, HSystem};
pub use isom::{isom_data, IsomData};
pub use pi::{build_pi, PiSystem, Triple};
pub use sections::Section;
pub use vars::{poly, universe};

use std::sync::OnceLock;

/// All catalog objects, built once.
#[derive(Clone, Debug)]
pub struct Catalog {
    pub pi: PiSystem,
    pub h: HSystem,
    pub iso: IsomData,
    pub classes: Vec<FanoClass>,
}

impl Catalog {
    pub fn build() -> Catalog {
        Catalog { pi: build_pi(), h: build_h(), iso: isom_data(), classes: all_classes() }
    }

    pub fn class(&self, n: u32) -> Result<&FanoClass, CatalogError> {
        self.classes.iter().find(|c| c.number == n).ok_or(CatalogError::UnknownClass(n))
    }

    /// Canonical text form of the object `id` (see [`object_ids`]).
    pub fn dump(&self, id: &str) -> Result<String, CatalogError> {
        let unknown = || CatalogError::UnknownObject(id.to_string());
        let (ns, rest) = id.split_once('.').ok_or_else(unknown)?;
        let text = match (ns, rest) {
            ("pi", "M") => self.pi.m.to_string(),
            ("pi", "G") => self.pi.g.to_string(),
            ("pi", "b") => self.pi.b.to_string(),
            ("pi", r) if r.starts_with("Fprime") => nth(&self.pi.fprime, &r[6..]).ok_or_else(unknown)?,
            ("pi", r) if r.starts_with('F') => nth(&self.pi.f, &r[1..]).ok_or_else(unknown)?,
            ("pi", r) if r.starts_with('H') => nth(&self.pi.h, &r[1..]).ok_or_else(unknown)?,
            ("pi", r) if r.starts_with('D') && r.len() == 4 => {
                let d: Vec<usize> = r[1..].chars().filter_map(|c| c.to_digit(10).map(|x| x as usize)).collect();
                self.pi.minors.get(&(d[0], d[1], d[2])).ok_or_else(unknown)?.to_string()
            }
            ("pi", r) if r.starts_with('m') && r.len() == 3 => {
                let d: Vec<usize> = r[1..].chars().filter_map(|c| c.to_digit(10).map(|x| x as usize)).collect();
                self.pi.m_coords.get(&(d[0], d[1])).ok_or_else(unknown)?.to_string()
            }
            ("h13", "hyperdet") => self.h.hyperdet.to_string(),
            ("h13", r) if r.starts_with('G') => {
                let k: usize = r[1..].parse().map_err(|_| unknown())?;
                match k {
                    1..=3 => self.h.g_vec[k - 1].to_string(),
                    4..=6 => self.h.g_scalar[k - 4].to_string(),
                    _ => return Err(unknown()),
                }
            }
            ("iso", name) => self.iso.image(name).ok_or_else(unknown)?.to_string(),
            ("class", r) => {
                let (n, what) = r.split_once('.').ok_or_else(unknown)?;
                let n: u32 = n.parse().map_err(|_| unknown())?;
                let c = self.class(n)?;
                match what {
                    "weights" => c
                        .weight_table
                        .entries()
                        .map(|(v, w)| format!("{v} {w}"))
                        .collect::<Vec<_>>()
                        .join("\n"),
                    "T" => c
                        .section
                        .t_sub
                        .assigned()
                        .map(|(i, p)| format!("{} = {p}", universe().name(i)))
                        .collect::<Vec<_>>()
                        .join("\n"),
                    "basket" => c.basket_text(),
                    _ => return Err(unknown()),
                }
            }
            _ => return Err(unknown()),
        };
        Ok(text)
    }
}

fn nth(list: &[crate::poly::Polynomial], k: &str) -> Option<String> {
    let k: usize = k.parse().ok()?;
    list.get(k.checked_sub(1)?).map(|p| p.to_string())
}

/// The shared catalog instance.
pub fn catalog() -> &'static Catalog {
    static C: OnceLock<Catalog> = OnceLock::new();
    C.get_or_init(Catalog::build)
}

/// Every id accepted by [`Catalog::dump`].
pub fn object_ids() -> Vec<String> {
    let mut ids: Vec<String> = vec!["pi.M".into(), "pi.G".into(), "pi.b".into()];
    ids.extend((1..=9).map(|i| format!("pi.F{i}")));
    ids.extend((1..=6).map(|i| format!("pi.Fprime{i}")));
    ids.extend((1..=6).map(|i| format!("pi.H{i}")));
    ids.extend(pi::triples().into_iter().map(|(i, j, k)| format!("pi.D{i}{j}{k}")));
    ids.extend(pi::M_CHART.iter().map(|(i, j, _, _)| format!("pi.m{i}{j}")));
    ids.extend((1..=6).map(|i| format!("h13.G{i}")));
    ids.push("h13.hyperdet".into());
    ids.extend(vars::H_VARS.iter().map(|v| format!("iso.{v}")));
    for n in CLASS_NUMBERS {
        for what in ["weights", "T", "basket"] {
            ids.push(format!("class.{n}.{what}"));
        }
    }
    ids
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_listed_object_dumps() {
        let c = catalog();
        for id in object_ids() {
            assert!(c.dump(&id).is_ok(), "{id}");
        }
        assert!(c.dump("pi.F10").is_err());
        assert!(c.dump("nope").is_err());
        assert_eq!(c.dump("pi.m45").unwrap(), poly("-p2*p3+p1*p4").to_string());
    }
}
