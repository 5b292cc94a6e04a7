#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rc/bigcomplex.hpp"
#include "rc/precision.hpp"
#include "rc/series.hpp"

namespace rc::maps {

enum class MapKind {
    OneCut,
    TwoCut,
    CutAB,
    NCut,
    PairedConjugateCuts,
    NomeUniformization,
    TwoPunctureUniformization,
    ConjugatePunctureUniformization,
    OmegaZUniformization,
    LandenComposite,
    OmegaZPartial,
    Symmetrized,
    DiskAutomorphism,
};

namespace detail {
struct MapImpl;
}

// A named conformal or uniformizing map psi: Omega -> D with covering map
// phi = psi^{-1}, normalized so phi(0) = 0 and phi'(0) > 0. Instances are
// immutable; evaluation is pure.
//
// phi is evaluated on the open disk; psi on the principal sheet of Omega.
// Maps defined through fractional powers or surface logarithms evaluate by
// branch tracking along the ray from the origin to the query point.
class MapInstance {
  public:
    MapInstance() = default;
    explicit MapInstance(std::shared_ptr<const detail::MapImpl> impl) : impl_(std::move(impl)) {}

    MapKind kind() const;
    std::string name() const;    // CLI identifier, e.g. "nome", "one-cut"
    std::string params() const;  // human-readable parameter summary ("" if none)

    BigComplex phi(const BigComplex& z, const PrecisionContext& ctx) const;
    BigComplex psi(const BigComplex& w, const PrecisionContext& ctx) const;
    TruncatedSeries phi_series(int order, const PrecisionContext& ctx) const;
    TruncatedSeries psi_series(int order, const PrecisionContext& ctx) const;

    // |psi'(0)| = 1/phi'(0); the accuracy acceleration modulus.
    BigFloat acceleration_modulus(const PrecisionContext& ctx) const;

    bool valid() const { return impl_ != nullptr; }

  private:
    std::shared_ptr<const detail::MapImpl> impl_;
};

MapInstance one_cut();                                      // C \ [1,inf)
MapInstance two_cut();                                      // C \ (-inf,-1] u [1,inf)
MapInstance cut_ab(const BigFloat& a, const BigFloat& b);   // C \ (-inf,-a] u [b,inf)
MapInstance n_cut(int n);                                   // n symmetric radial cuts
MapInstance paired_conjugate_cuts(const BigFloat& theta, int n);
MapInstance nome_uniformization();                          // Omega(C^ \ {(0),1,inf})
MapInstance two_puncture();                                 // Omega(C^ \ {-1,1,inf})
MapInstance conjugate_puncture(const BigFloat& theta);      // punctures e^{+-i theta}
MapInstance omega_z();                                      // Omega_Z (curves in C \ Z)
MapInstance landen_composite(int k);                        // finite Landen composition
MapInstance omega_z_partial(int k);                         // log of the Landen composite
MapInstance symmetrize(const MapInstance& base, int n);     // phi(z^n)^(1/n)
MapInstance disk_automorphism(const BigComplex& a);         // z -> (z-a)/(1-conj(a) z)

// Default instances for `maps list` (disk automorphism excluded: it is
// plumbing and does not satisfy the phi(0)=0 normalization).
std::vector<MapInstance> catalog();

// CLI factory; throws DomainError for unknown names or bad parameters.
// Recognized names match MapInstance::name() of the factories above.
MapInstance by_name(const std::string& name, const std::string& params_csv,
                    const PrecisionContext& ctx);

}  // namespace rc::maps
