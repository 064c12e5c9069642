//! An affine Weyl group bundled with the quantum Bruhat graph of its
//! translation system, which is what chain and Möbius computations need.

use std::sync::Arc;

use crate::affine::{AffineWeylGroup, Convention};
use crate::cartan::RootSystem;
use crate::error::Result;
use crate::qbg::{QuantumBruhatGraph, ReflectionOrdering, Untwisted};
use crate::weyl::WeylGroup;

#[derive(Debug)]
pub struct Context {
    group: AffineWeylGroup,
    graph: QuantumBruhatGraph<Untwisted>,
    ordering: ReflectionOrdering,
}

impl Context {
    pub fn new(rs: RootSystem, convention: Convention) -> Result<Self> {
        Self::from_group(AffineWeylGroup::new(rs, convention)?)
    }

    pub fn named(label: &str, convention: Convention) -> Result<Self> {
        Self::new(RootSystem::named(label)?, convention)
    }

    pub fn from_group(group: AffineWeylGroup) -> Result<Self> {
        let graph = QuantumBruhatGraph::new(group.weyl_arc().clone())?;
        let ordering = ReflectionOrdering::default_for(group.weyl());
        Ok(Context { group, graph, ordering })
    }

    pub fn group(&self) -> &AffineWeylGroup {
        &self.group
    }

    /// The untwisted graph of the translation system. Under the dual
    /// convention this is the dual graph of the named system.
    pub fn graph(&self) -> &QuantumBruhatGraph<Untwisted> {
        &self.graph
    }

    pub fn ordering(&self) -> &ReflectionOrdering {
        &self.ordering
    }

    pub fn weyl(&self) -> &WeylGroup {
        self.group.weyl()
    }

    pub fn weyl_arc(&self) -> &Arc<WeylGroup> {
        self.group.weyl_arc()
    }

    pub fn root_system(&self) -> &RootSystem {
        self.group.root_system()
    }
}
