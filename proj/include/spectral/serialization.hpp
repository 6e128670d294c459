#pragma once

#include <string>

#include <json.hpp>

#include "spectral/clustering.hpp"
#include "spectral/domain.hpp"
#include "spectral/perturbation_bounds.hpp"
#include "spectral/selfmap_dynamics.hpp"
#include "spectral/types.hpp"

namespace spectral {

// JSON wire formats shared by the library and the CLI. Matrices are
// {"n": int, "re": [[..]], "im": [[..]]}; coefficient points and spectra are
// {"n": int, "re": [..], "im": [..]} (signed convention for CoeffPoint).

nlohmann::json to_json(const CMatrix& m);
CMatrix cmatrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CVector& v);
CVector cvector_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CoeffPoint& x);
CoeffPoint coeff_point_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Spectrum& s);

nlohmann::json to_json(const JordanProfile& p);

nlohmann::json to_json(const DomainSpec& d);
DomainSpec domain_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SelfMap& m);
SelfMap selfmap_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ClusterData& c);

nlohmann::json to_json(const MatchResult& m);
nlohmann::json to_json(const BoundReport& r);

nlohmann::json to_json(const IterationReport& r, bool include_orbit);
nlohmann::json to_json(const FixedSetReport& r);

/// FNV-1a hash of the canonical (sorted-key, no-whitespace) JSON dump,
/// rendered as 16 hex digits. Used for replayable input digests.
std::string digest(const nlohmann::json& j);

}  // namespace spectral
