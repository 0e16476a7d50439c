use crate::closure::ClosureSpace;
use crate::error::{Error, Result};
use crate::props::{
    contains_mo_n, find_orthocomplementation, has_covering_property, is_transitive,
    is_weakly_connected, BranchOrder, Connectivity, NotConnected, OrthoSearch, DEFAULT_NODE_LIMIT,
};
use crate::report::Verdict;

use super::Outcome;

pub fn covering(space: &ClosureSpace) -> Outcome {
    match has_covering_property(space) {
        Ok(()) => Outcome::pass(""),
        Err(f) => {
            let between = f
                .witness
                .intermediate
                .map_or("-".to_string(), |s| space.render_braced(s));
            Outcome::new(
                Verdict::Fail,
                format!(
                    "atom {} element {} join {} between {}",
                    space.label(f.atom),
                    space.render_braced(f.element),
                    space.render_braced(f.witness.upper),
                    between
                ),
            )
        }
    }
}

pub fn dual_order(space: &ClosureSpace) -> Outcome {
    let r = space.dual_order_check();
    let w = format!(
        "coatomistic {} dual-covering {}",
        r.coatomistic, r.dual_covering
    );
    Outcome::new(Verdict::from_bool(r.coatomistic && r.dual_covering), w)
}

pub fn orthocomplementation(space: &ClosureSpace) -> Result<Outcome> {
    match find_orthocomplementation(space, BranchOrder::Canonical, DEFAULT_NODE_LIMIT) {
        Ok(OrthoSearch::Found(map)) => {
            let images: Vec<String> = map
                .atom_images(space)
                .iter()
                .enumerate()
                .map(|(p, &x)| format!("{}->{}", space.label(p), space.render_braced(x)))
                .collect();
            Ok(Outcome::pass(images.join(" ")))
        }
        Ok(OrthoSearch::Exhausted(cert)) => Ok(Outcome::new(Verdict::None, cert.to_string())),
        Err(Error::SearchLimit(limit)) => Ok(Outcome::new(
            Verdict::Fail,
            format!("search exceeded {limit} nodes"),
        )),
        Err(e) => Err(e),
    }
}

pub fn contains_mo3(space: &ClosureSpace) -> Result<Outcome> {
    Ok(match contains_mo_n(space, 3)? {
        Some(atoms) => {
            let labels: Vec<&str> = atoms.iter().map(|&p| space.label(p)).collect();
            Outcome::pass(labels.join(" "))
        }
        None => Outcome::new(Verdict::Fail, ""),
    })
}

pub fn weakly_connected(space: &ClosureSpace) -> Outcome {
    match is_weakly_connected(space) {
        Connectivity::Connected(c) => {
            let blocks: Vec<String> = c.blocks.iter().map(|&b| space.render_braced(b)).collect();
            Outcome::pass(format!("blocks {}", blocks.join(" ")))
        }
        Connectivity::Not(NotConnected::IsTwo) => {
            Outcome::new(Verdict::Fail, "two-element lattice")
        }
        Connectivity::Not(NotConnected::IsolatedAtom(p)) => {
            Outcome::new(Verdict::Fail, format!("isolated atom {}", space.label(p)))
        }
        Connectivity::Unknown => Outcome::new(Verdict::Unknown, "no covering found"),
    }
}

pub fn transitive(space: &ClosureSpace) -> Result<Outcome> {
    Ok(Outcome::new(Verdict::from_bool(is_transitive(space)?), ""))
}
