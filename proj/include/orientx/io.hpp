#pragma once

#include <string>
#include <variant>

#include "orientx/expansion.hpp"
#include "orientx/orderparams.hpp"

namespace orientx {

enum class Family { circular, spherical, wigner, cartesian2d, cartesian3d, cartesian_biaxial };

std::string family_name(Family f);
/// Throws ParseError for unknown names.
Family parse_family(const std::string& name);

using AnyCoeffs =
    std::variant<CircularCoeffs, SphericalCoeffs, WignerCoeffs, CartesianCoeffsUniaxial, CartesianCoeffsBiaxial>;

Family family_of(const AnyCoeffs& c);
int max_order_of(const AnyCoeffs& c);

// Coefficient files:
// {"family", "max_order", "real", "generator", "convention": "gray-gubbins-passive",
//  "entries": [{"index": [...], "re", "im"}]}
// Index layouts: [k], [l,m], [l,m,n], [l,i1..il], [l,i1,j1,..,il,jl] with
// 1-based Cartesian indices. Missing entries are zero.

std::string coefficients_to_json(const AnyCoeffs& c, const std::string& generator = "orientx");
/// ParseError on schema violations (unknown keys in entries, duplicates,
/// indices out of range); InvariantError if tagged real but not real to 1e-10.
AnyCoeffs coefficients_from_json(const std::string& text);

void write_coefficients(const std::string& path, const AnyCoeffs& c, const std::string& generator = "orientx");
AnyCoeffs read_coefficients(const std::string& path);

/// Writes to a temporary file next to `path`, then renames it over `path`.
void write_text_atomic(const std::string& path, const std::string& content);
std::string read_text(const std::string& path);

// Snapshots: CSV with header x,y,phi | x,y,z,theta,phi | x,y,z,theta,phi,chi,
// or JSON {"particles": [{"x": .., "y": .., ...}]} with the same keys.
// theta outside [0, pi] is a DomainError naming the record.

ParticleSnapshot parse_snapshot_csv(const std::string& text);
ParticleSnapshot parse_snapshot_json(const std::string& text);
/// Chooses JSON if the first non-blank character is '{', CSV otherwise.
ParticleSnapshot read_snapshot(const std::string& path);

std::string summary_to_json(const OrderParameterSummary& s, bool head_tail);
std::string field_to_json(const OrderParameterField& f, bool head_tail);

}  // namespace orientx
