#include "spectral/serialization.hpp"

#include <cstdint>

namespace spectral {

using nlohmann::json;

json to_json(const CMatrix& m) {
  const Eigen::Index n = m.rows();
  json re = json::array(), im = json::array();
  for (Eigen::Index i = 0; i < n; ++i) {
    json re_row = json::array(), im_row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      re_row.push_back(m(i, j).real());
      im_row.push_back(m(i, j).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return json{{"n", n}, {"re", std::move(re)}, {"im", std::move(im)}};
}

CMatrix cmatrix_from_json(const json& j) {
  const Eigen::Index n = j.at("n").get<Eigen::Index>();
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (static_cast<Eigen::Index>(re.size()) != n || static_cast<Eigen::Index>(im.size()) != n)
    throw Error("cmatrix_from_json: row count mismatch");
  CMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& re_row = re.at(static_cast<size_t>(i));
    const auto& im_row = im.at(static_cast<size_t>(i));
    if (static_cast<Eigen::Index>(re_row.size()) != n ||
        static_cast<Eigen::Index>(im_row.size()) != n)
      throw Error("cmatrix_from_json: column count mismatch");
    for (Eigen::Index k = 0; k < n; ++k)
      m(i, k) = Complex(re_row.at(static_cast<size_t>(k)).get<double>(),
                        im_row.at(static_cast<size_t>(k)).get<double>());
  }
  return m;
}

json to_json(const CVector& v) {
  json re = json::array(), im = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    re.push_back(v(i).real());
    im.push_back(v(i).imag());
  }
  return json{{"n", v.size()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

CVector cvector_from_json(const json& j) {
  const Eigen::Index n = j.at("n").get<Eigen::Index>();
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (static_cast<Eigen::Index>(re.size()) != n || static_cast<Eigen::Index>(im.size()) != n)
    throw Error("cvector_from_json: length mismatch");
  CVector v(n);
  for (Eigen::Index i = 0; i < n; ++i)
    v(i) = Complex(re.at(static_cast<size_t>(i)).get<double>(),
                   im.at(static_cast<size_t>(i)).get<double>());
  return v;
}

json to_json(const CoeffPoint& x) { return to_json(x.z); }

CoeffPoint coeff_point_from_json(const json& j) {
  return CoeffPoint(cvector_from_json(j));
}

json to_json(const Spectrum& s) { return to_json(s.values); }

json to_json(const JordanProfile& p) {
  json groups = json::array();
  for (const auto& g : p.groups) {
    groups.push_back(json{{"eigenvalue_re", g.eigenvalue.real()},
                          {"eigenvalue_im", g.eigenvalue.imag()},
                          {"block_sizes", g.block_sizes}});
  }
  return json{{"groups", std::move(groups)}, {"tol", p.tol}};
}

json to_json(const DomainSpec& d) {
  switch (d.shape()) {
    case DomainShape::Disc:
      return json{{"shape", "disc"},
                  {"center_re", d.center().real()},
                  {"center_im", d.center().imag()},
                  {"radius", d.radius()}};
    case DomainShape::Halfplane:
      return json{{"shape", "halfplane"},
                  {"normal_re", d.normal().real()},
                  {"normal_im", d.normal().imag()},
                  {"offset", d.offset()}};
    case DomainShape::Annulus:
      return json{{"shape", "annulus"},
                  {"center_re", d.center().real()},
                  {"center_im", d.center().imag()},
                  {"r_in", d.inner_radius()},
                  {"r_out", d.radius()}};
    case DomainShape::ComplementOfFinite: {
      json re = json::array(), im = json::array();
      for (Complex p : d.removed_points()) {
        re.push_back(p.real());
        im.push_back(p.imag());
      }
      return json{{"shape", "complement_of_finite"}, {"re", std::move(re)}, {"im", std::move(im)}};
    }
    case DomainShape::WholePlane:
      return json{{"shape", "whole_plane"}};
  }
  throw Error("to_json(DomainSpec): unknown shape");
}

DomainSpec domain_from_json(const json& j) {
  const std::string shape = j.at("shape").get<std::string>();
  if (shape == "disc")
    return DomainSpec::disc(Complex(j.at("center_re").get<double>(),
                                    j.at("center_im").get<double>()),
                            j.at("radius").get<double>());
  if (shape == "halfplane")
    return DomainSpec::halfplane(Complex(j.at("normal_re").get<double>(),
                                         j.at("normal_im").get<double>()),
                                 j.at("offset").get<double>());
  if (shape == "annulus")
    return DomainSpec::annulus(Complex(j.at("center_re").get<double>(),
                                       j.at("center_im").get<double>()),
                               j.at("r_in").get<double>(), j.at("r_out").get<double>());
  if (shape == "complement_of_finite") {
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    std::vector<Complex> removed;
    for (size_t i = 0; i < re.size(); ++i)
      removed.emplace_back(re.at(i).get<double>(), im.at(i).get<double>());
    return DomainSpec::complement_of_finite(std::move(removed));
  }
  if (shape == "whole_plane") return DomainSpec::whole_plane();
  throw Error("domain_from_json: unknown shape " + shape);
}

namespace {

struct SelfMapToJson {
  json operator()(const PolynomialMap& m) const {
    return json{{"kind", "poly"}, {"coeffs", to_json(m.coeffs)}};
  }
  json operator()(const PowerSeriesMap& m) const {
    return json{{"kind", "series"},
                {"coeffs", to_json(m.coeffs)},
                {"radius", m.radius},
                {"coeff_bound", m.coeff_bound}};
  }
  json operator()(const RationalMap& m) const {
    return json{{"kind", "rational"}, {"num", to_json(m.num)}, {"den", to_json(m.den)}};
  }
  json operator()(const Conjugation& m) const {
    return json{{"kind", "conjugation"}, {"s", to_json(m.s)}};
  }
  json operator()(const Translation& m) const {
    return json{{"kind", "translation"},
                {"lambda_re", m.lambda.real()},
                {"lambda_im", m.lambda.imag()}};
  }
  json operator()(const ExpShift&) const { return json{{"kind", "exp_shift"}}; }
  json operator()(const QuadPerturb& m) const {
    return json{{"kind", "quad_perturb"},
                {"base", to_json(m.base)},
                {"factor", to_json(m.factor)}};
  }
  json operator()(const Composition& m) const {
    json maps = json::array();
    for (const auto& inner : m.maps) maps.push_back(to_json(inner));
    return json{{"kind", "composition"}, {"maps", std::move(maps)}};
  }
};

}  // namespace

json to_json(const SelfMap& m) {
  json j = std::visit(SelfMapToJson{}, m.variant());
  j["domain"] = to_json(m.domain());
  return j;
}

SelfMap selfmap_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  DomainSpec domain = domain_from_json(j.at("domain"));
  if (kind == "poly")
    return SelfMap::polynomial(cvector_from_json(j.at("coeffs")), std::move(domain));
  if (kind == "series")
    return SelfMap::power_series(cvector_from_json(j.at("coeffs")),
                                 j.at("radius").get<double>(),
                                 j.at("coeff_bound").get<double>(), std::move(domain));
  if (kind == "rational")
    return SelfMap::rational(cvector_from_json(j.at("num")),
                             cvector_from_json(j.at("den")), std::move(domain));
  if (kind == "conjugation")
    return SelfMap::conjugation(cmatrix_from_json(j.at("s")), std::move(domain));
  if (kind == "translation")
    return SelfMap::translation(Complex(j.at("lambda_re").get<double>(),
                                        j.at("lambda_im").get<double>()),
                                std::move(domain));
  if (kind == "exp_shift") return SelfMap::exp_shift(std::move(domain));
  if (kind == "quad_perturb")
    return SelfMap::quad_perturb(cmatrix_from_json(j.at("base")),
                                 cmatrix_from_json(j.at("factor")), std::move(domain));
  if (kind == "composition") {
    std::vector<SelfMap> maps;
    for (const auto& inner : j.at("maps")) maps.push_back(selfmap_from_json(inner));
    return SelfMap::composition(std::move(maps), std::move(domain));
  }
  throw Error("selfmap_from_json: unknown kind " + kind);
}

json to_json(const ClusterData& c) {
  json centers_re = json::array(), centers_im = json::array();
  for (Complex z : c.centers) {
    centers_re.push_back(z.real());
    centers_im.push_back(z.imag());
  }
  return json{{"base", to_json(c.base)},
              {"omega", to_json(c.omega)},
              {"centers_re", std::move(centers_re)},
              {"centers_im", std::move(centers_im)},
              {"multiplicities", c.multiplicities},
              {"r", c.r},
              {"delta", c.delta},
              {"certification",
               json{{"method", "analytic+sampling"},
                    {"analytic_radius", c.certification.analytic_radius},
                    {"sampled_radius", c.certification.sampled_radius},
                    {"trials", c.certification.trials},
                    {"seed", c.certification.seed}}}};
}

json to_json(const MatchResult& m) {
  return json{{"permutation", m.permutation},
              {"bottleneck", m.bottleneck},
              {"method", m.method == MatchMethod::Exhaustive ? "exhaustive"
                                                             : "threshold-matching"}};
}

json to_json(const BoundReport& r) {
  return json{{"lhs", r.lhs},
              {"rhs", r.rhs},
              {"slack", r.slack},
              {"inputs_digest", r.inputs_digest},
              {"verdict", r.verdict == Verdict::Holds ? "holds" : "violated"}};
}

json to_json(const IterationReport& r, bool include_orbit) {
  json j{{"converged", r.converged},
         {"orbit_length", r.orbit.size()},
         {"derivative_spectrum", to_json(r.derivative_spectrum)},
         {"unimodular_count", r.unimodular_count},
         {"contracting_count", r.contracting_count},
         {"unresolved_count", r.unresolved_count}};
  if (r.limit) j["limit"] = to_json(*r.limit);
  if (include_orbit) {
    json orbit = json::array();
    for (const auto& z : r.orbit) orbit.push_back(to_json(z));
    j["orbit"] = std::move(orbit);
  }
  return j;
}

json to_json(const FixedSetReport& r) {
  return json{{"eig_one_count", r.eig_one_count},
              {"minpoly_degree", r.minpoly_degree},
              {"theorem_holds", r.theorem_holds},
              {"fixed_point_deviation", r.fixed_point_deviation},
              {"derivative_deviation", r.derivative_deviation}};
}

std::string digest(const json& j) {
  const std::string dump = j.dump();  // nlohmann keeps object keys sorted
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : dump) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return std::string(buf);
}

}  // namespace spectral
