use std::collections::BTreeMap;

use crate::cg::{x_spectrum, CgMatrix, IrrepSpectrum};
use crate::error::Result;
use crate::permgroup::{CosetCoord, GroupTable, Permutation};
use crate::rep3::{OrbitBasis, Representation};
use crate::scalar::Real;

/// Everything needed to evaluate bounds: the group, its standard
/// representation, the orbit basis, the CG matrix and the 24 spectra.
#[derive(Clone, Debug)]
pub struct Model<T> {
    group: &'static GroupTable,
    rep: Representation<T>,
    orbit: OrbitBasis<T>,
    cg: CgMatrix<T>,
    spectra: BTreeMap<Permutation, IrrepSpectrum<T>>,
}

impl<T: Real> Model<T> {
    pub fn build() -> Result<Self> {
        Self::with_cg(CgMatrix::standard())
    }

    /// Builds the model around a caller-supplied CG matrix.
    pub fn with_cg(cg: CgMatrix<T>) -> Result<Self> {
        let group = GroupTable::s4();
        let rep = Representation::build()?;
        let orbit = OrbitBasis::build(group, &rep);
        let spectra = group
            .elements()
            .iter()
            .map(|g| (*g, x_spectrum(&rep, &cg, g)))
            .collect();
        Ok(Model {
            group,
            rep,
            orbit,
            cg,
            spectra,
        })
    }

    pub fn group(&self) -> &'static GroupTable {
        self.group
    }

    pub fn representation(&self) -> &Representation<T> {
        &self.rep
    }

    pub fn orbit(&self) -> &OrbitBasis<T> {
        &self.orbit
    }

    pub fn cg(&self) -> &CgMatrix<T> {
        &self.cg
    }

    pub fn spectrum(&self, g: &Permutation) -> &IrrepSpectrum<T> {
        &self.spectra[g]
    }

    /// Spectra of all 24 elements in lexicographic one-line order.
    pub fn spectra(&self) -> impl Iterator<Item = &IrrepSpectrum<T>> {
        self.spectra.values()
    }

    /// `g_α gˡ` for a coordinate.
    pub fn element(&self, c: CosetCoord) -> Permutation {
        self.group.element(c)
    }
}
