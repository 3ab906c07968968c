#include "loopfield/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "loopfield/errors.hpp"

namespace loopfield {

namespace {

using nlohmann::json;

void reject_unknown(const json& j, const std::set<std::string>& known,
                    const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!known.count(it.key()))
      throw ConfigError("unknown config key '" + it.key() + "' in " + where);
}

template <typename T>
void get_if_present(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

QuadratureSpec parse_quadrature(const json& j, const QuadratureSpec& base,
                                const std::string& where) {
  reject_unknown(j,
                 {"radial_order", "radial_panels", "r_max", "r_split",
                  "theta_order", "phi_order", "target_rel_tol",
                  "target_abs_tol"},
                 where);
  QuadratureSpec s = base;
  get_if_present(j, "radial_order", s.radial_order);
  get_if_present(j, "radial_panels", s.radial_panels);
  get_if_present(j, "r_max", s.r_max);
  get_if_present(j, "r_split", s.r_split);
  get_if_present(j, "theta_order", s.theta_order);
  get_if_present(j, "phi_order", s.phi_order);
  get_if_present(j, "target_rel_tol", s.target_rel_tol);
  get_if_present(j, "target_abs_tol", s.target_abs_tol);
  return s;
}

json quadrature_json(const QuadratureSpec& s) {
  return json{{"radial_order", s.radial_order},
              {"radial_panels", s.radial_panels},
              {"r_max", s.r_max},
              {"r_split", s.r_split},
              {"theta_order", s.theta_order},
              {"phi_order", s.phi_order},
              {"target_rel_tol", s.target_rel_tol},
              {"target_abs_tol", s.target_abs_tol}};
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  reject_unknown(
      j,
      {"schema_version", "a_width", "b_width", "b_amplitude",
       "smear_amplitude", "plane1", "axis1", "plane2", "axis2", "radius",
       "translation", "traversal1", "traversal2", "eta", "zeta", "weyl_a",
       "quadrature", "fast_quadrature", "threads", "seed", "out_dir",
       "cache_dir", "scan"},
      "top level");

  ExperimentConfig c;
  get_if_present(j, "schema_version", c.schema_version);
  if (c.schema_version != 1)
    throw ConfigError("unsupported schema_version (expected 1)");
  get_if_present(j, "a_width", c.a_width);
  get_if_present(j, "b_width", c.b_width);
  get_if_present(j, "b_amplitude", c.b_amplitude);
  get_if_present(j, "smear_amplitude", c.smear_amplitude);
  get_if_present(j, "plane1", c.plane1);
  get_if_present(j, "axis1", c.axis1);
  get_if_present(j, "plane2", c.plane2);
  get_if_present(j, "axis2", c.axis2);
  get_if_present(j, "radius", c.radius);
  get_if_present(j, "translation", c.translation);
  get_if_present(j, "traversal1", c.traversal1);
  get_if_present(j, "traversal2", c.traversal2);
  get_if_present(j, "eta", c.eta);
  get_if_present(j, "zeta", c.zeta);
  get_if_present(j, "weyl_a", c.weyl_a);
  if (j.contains("quadrature"))
    c.quadrature = parse_quadrature(j.at("quadrature"),
                                    QuadratureSpec::standard(), "quadrature");
  if (j.contains("fast_quadrature"))
    c.fast_quadrature = parse_quadrature(
        j.at("fast_quadrature"), QuadratureSpec::fast(), "fast_quadrature");
  get_if_present(j, "threads", c.threads);
  get_if_present(j, "seed", c.seed);
  get_if_present(j, "out_dir", c.out_dir);
  get_if_present(j, "cache_dir", c.cache_dir);
  if (j.contains("scan")) {
    const json& s = j.at("scan");
    reject_unknown(s, {"param", "from", "to", "steps"}, "scan");
    get_if_present(s, "param", c.scan.param);
    get_if_present(s, "from", c.scan.from);
    get_if_present(s, "to", c.scan.to);
    get_if_present(s, "steps", c.scan.steps);
  }
  c.validate();
  return c;
}

std::string ExperimentConfig::to_json_text() const {
  json j{{"schema_version", schema_version},
         {"a_width", a_width},
         {"b_width", b_width},
         {"b_amplitude", b_amplitude},
         {"smear_amplitude", smear_amplitude},
         {"plane1", plane1},
         {"axis1", axis1},
         {"plane2", plane2},
         {"axis2", axis2},
         {"radius", radius},
         {"translation", translation},
         {"traversal1", traversal1},
         {"traversal2", traversal2},
         {"eta", eta},
         {"zeta", zeta},
         {"weyl_a", weyl_a},
         {"quadrature", quadrature_json(quadrature)},
         {"fast_quadrature", quadrature_json(fast_quadrature)},
         {"threads", threads},
         {"seed", seed},
         {"out_dir", out_dir},
         {"cache_dir", cache_dir},
         {"scan", json{{"param", scan.param},
                       {"from", scan.from},
                       {"to", scan.to},
                       {"steps", scan.steps}}}};
  return j.dump(2);
}

void ExperimentConfig::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0))
      throw ConfigError(std::string("config field ") + name +
                        " must be positive");
  };
  positive(a_width, "a_width");
  positive(b_width, "b_width");
  positive(radius, "radius");
  if (b_width >= 1.0)
    throw ConfigError("b_width must be < 1 (radial support convention)");
  auto check_plane = [](const std::array<int, 2>& pl, int ax, const char* nm) {
    if (pl[0] + pl[1] + ax != 6 || pl[0] < 1 || pl[1] < 1 || ax < 1 ||
        pl[0] == pl[1] || pl[0] == ax || pl[1] == ax)
      throw ConfigError(std::string("config ") + nm +
                        ": plane and axis must be a permutation of {1,2,3}");
  };
  check_plane(plane1, axis1, "loop 1");
  check_plane(plane2, axis2, "loop 2");
  if (traversal1 == 0 || traversal2 == 0)
    throw ConfigError("traversal counts must be nonzero");
  if (threads < 1 || threads > 256)
    throw ConfigError("threads must be in [1, 256]");
  if (quadrature.r_max > kTransformRange ||
      fast_quadrature.r_max > kTransformRange)
    throw ConfigError("quadrature r_max exceeds the transform table range");
  const std::set<std::string> params{"eta", "zeta", "separation", "width", "a"};
  if (!params.count(scan.param))
    throw ConfigError("scan.param must be one of eta|zeta|separation|width|a");
  if (scan.steps < 1) throw ConfigError("scan.steps must be >= 1");
}

HopfExperiment build_hopf_experiment(const ExperimentConfig& cfg) {
  HopfExperiment h;
  const Profile1D alpha = Profile1D::bump(0.0, cfg.a_width).normalized();
  const Profile1D beta = Profile1D::bump(0.0, cfg.a_width).normalized();
  const Profile1D b1 =
      Profile1D::bump(0.0, cfg.b_width, cfg.b_amplitude * cfg.smear_amplitude);
  const Profile1D b2 = Profile1D::bump(0.0, cfg.b_width, cfg.b_amplitude);

  h.cs1 = CanonicalSpec{cfg.plane1[0], cfg.plane1[1], cfg.axis1,
                        alpha,         beta,          b1,
                        Vec4{0, 0, 0, 0}};
  h.cs2 = CanonicalSpec{cfg.plane2[0], cfg.plane2[1], cfg.axis2,
                        alpha,         beta,          b2,
                        cfg.translation};
  h.loop1 = CircleLoop{cfg.plane1[0], cfg.plane1[1], cfg.radius,
                       Vec4{0, 0, 0, 0}, cfg.traversal1};
  h.loop2 = CircleLoop{cfg.plane2[0], cfg.plane2[1], cfg.radius,
                       cfg.translation, cfg.traversal2};

  h.g12 = canonical_g(h.cs1);
  h.g03 = canonical_g0(h.cs1);
  h.g13 = canonical_g(h.cs2);
  if (cfg.traversal1 != 1) {
    // traversal counts live in the parametrization; canonical closed forms
    // cover a single traversal, so wound loops go through loop_function
    SmearSikl s{h.cs1.ci, h.cs1.ck, h.cs1.cl, alpha, beta, b1};
    h.g12 = loop_function(Smear(s), h.loop1)
                .with_coprimitive(disk_coprimitive(Smear(s), h.loop1));
  }
  if (cfg.traversal2 != 1) {
    SmearSikl s{h.cs2.ci, h.cs2.ck, h.cs2.cl, alpha, beta, b2};
    h.g13 = loop_function(Smear(s), h.loop2)
                .with_coprimitive(disk_coprimitive(Smear(s), h.loop2));
  }

  h.eta_star = eta_threshold(*h.g12.coprimitive(), *h.g03.coprimitive());
  h.eta = cfg.eta > 0.0 ? cfg.eta : 1.25 * h.eta_star;
  h.mixed = piece_sum(h.g12, h.g03.scaled(h.eta));
  return h;
}

}  // namespace loopfield
