#include "ruled/cli.hpp"

#include "ruled/catalog.hpp"
#include "ruled/class_reduction.hpp"
#include "ruled/errors.hpp"
#include "ruled/periods.hpp"
#include "ruled/sw.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

namespace ruled::cli {

namespace {

// ---------------------------------------------------------------------------
// Parameter documents.  Every subcommand reads a JSON object; flags are first
// translated into that object so --json output can be replayed via --input.

class Reader {
  public:
    Reader(const Json& j, std::string where) : j_(j), where_(std::move(where)) {
        if (!j_.is_object())
            throw ValidationError(where_ + ": input must be a JSON object");
    }

    bool has(const std::string& key) const { return j_.contains(key); }

    const Json& get(const std::string& key) {
        if (!j_.contains(key))
            throw ValidationError(where_ + ": missing \"" + key + "\"");
        used_.insert(key);
        return j_.at(key);
    }

    ManifoldModel model() { return model_from_json(get("model")); }

    Int integer(const std::string& key) { return int_from_json(get(key)); }

    unsigned small(const std::string& key, unsigned lo, unsigned hi) {
        Int v = integer(key);
        if (v < lo || v > hi)
            throw ValidationError(where_ + ": \"" + key + "\" must lie in [" + std::to_string(lo) +
                                  ", " + std::to_string(hi) + "]");
        return static_cast<unsigned>(v.get_ui());
    }

    std::vector<Int> ints(const std::string& key) {
        const Json& a = get(key);
        if (!a.is_array())
            throw ValidationError(where_ + ": \"" + key + "\" must be an array");
        std::vector<Int> v;
        for (const auto& x : a)
            v.push_back(int_from_json(x));
        return v;
    }

    std::vector<Rat> rats(const std::string& key) {
        const Json& a = get(key);
        if (!a.is_array())
            throw ValidationError(where_ + ": \"" + key + "\" must be an array");
        std::vector<Rat> v;
        for (const auto& x : a)
            v.push_back(rat_from_json(x));
        return v;
    }

    std::vector<std::string> strings(const std::string& key) {
        const Json& a = get(key);
        if (!a.is_array())
            throw ValidationError(where_ + ": \"" + key + "\" must be an array");
        std::vector<std::string> v;
        for (const auto& x : a) {
            if (!x.is_string())
                throw ValidationError(where_ + ": \"" + key + "\" must hold strings");
            v.push_back(x.get<std::string>());
        }
        return v;
    }

    std::string string(const std::string& key) {
        const Json& s = get(key);
        if (!s.is_string())
            throw ValidationError(where_ + ": \"" + key + "\" must be a string");
        return s.get<std::string>();
    }

    // Unknown keys are errors, like unknown flags.
    void finish() const {
        for (auto it = j_.begin(); it != j_.end(); ++it)
            if (!used_.count(it.key()))
                throw ValidationError(where_ + ": unexpected key \"" + it.key() + "\"");
    }

  private:
    const Json& j_;
    std::string where_;
    std::set<std::string> used_;
};

HomologyClass class_of(const ManifoldModel& m, const std::vector<Int>& coeffs) {
    return HomologyClass(m, coeffs);
}

Json ints_json(const std::vector<Int>& v) {
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(int_to_json(x));
    return a;
}

Json rats_json(const std::vector<Rat>& v) {
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(rat_to_json(x));
    return a;
}

Json strings_json(const std::vector<std::string>& v) {
    Json a = Json::array();
    for (const auto& s : v)
        a.push_back(s);
    return a;
}

Json label_json(const CoxeterLabel& l) {
    return l.is_infinite() ? Json("inf") : Json(l.value());
}

std::vector<size_t> indices(const std::vector<Int>& v, size_t limit, const std::string& what) {
    std::vector<size_t> out;
    for (const auto& x : v) {
        if (x < 0 || x >= limit)
            throw ValidationError(what + " index " + x.get_str() + " out of range");
        out.push_back(x.get_ui());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Flag values (raw strings) -> parameter documents.

using Flags = std::map<std::string, std::string>;

const std::string& need(const Flags& f, const std::string& name) {
    auto it = f.find(name);
    if (it == f.end())
        throw ValidationError("--" + name + " is required");
    return it->second;
}

bool given(const Flags& f, const std::string& name) { return f.count(name) > 0; }

Json int_flag(const Flags& f, const std::string& name) { return int_to_json(parse_int(need(f, name))); }

Json ints_flag(const Flags& f, const std::string& name) { return ints_json(parse_int_list(need(f, name))); }

Json rats_flag(const Flags& f, const std::string& name) { return rats_json(parse_rat_list(need(f, name))); }

Json model_flags(const Flags& f) {
    const std::string& kind = need(f, "model");
    Json m{{"kind", kind}, {"ell", int_flag(f, "ell")}};
    if (kind == "ruled")
        m["genus"] = int_flag(f, "genus");
    else if (given(f, "genus"))
        throw ValidationError("--genus only applies to --model ruled");
    // validate eagerly so flag errors surface before any computation
    model_from_json(m);
    return m;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    if (s.empty())
        return out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep))
        out.push_back(cur);
    if (s.back() == sep)
        out.push_back("");
    return out;
}

Json names_flag(const Flags& f, const std::string& name) {
    Json a = Json::array();
    for (auto& s : split(need(f, name), ',')) {
        if (s.empty())
            throw ValidationError("--" + name + ": empty generator name");
        a.push_back(s);
    }
    return a;
}

// "a,b,c;d,e,f;g,h,i"
Json matrix_flag(const Flags& f, const std::string& name) {
    Json rows = Json::array();
    for (auto& r : split(need(f, name), ';'))
        rows.push_back(ints_json(parse_int_list(r)));
    return rows;
}

// ---------------------------------------------------------------------------
// Commands

struct Outcome {
    Json result;
    int code = kOk;
};

struct Command {
    std::string name;
    std::string help;
    std::vector<std::pair<std::string, std::string>> flags;  // name, help
    std::function<Json(const Flags&)> from_flags;
    std::function<Outcome(const Json&)> exec;
};

const std::pair<std::string, std::string> kModel{"model", "rational | ruled"};
const std::pair<std::string, std::string> kEll{"ell", "number of blow-ups"};
const std::pair<std::string, std::string> kGenus{"genus", "genus of Y (ruled model)"};

Json manifold_info(const ManifoldModel& m) {
    Json r;
    r["description"] = m.describe();
    r["rank"] = m.rank();
    r["basis"] = strings_json(m.basis_names());
    r["form"] = to_json(m.gram());
    auto sig = signature(m.gram());
    r["signature"] = {{"positive", sig.positive}, {"negative", sig.negative}, {"zero", sig.zero}};
    r["determinant"] = int_to_json(determinant(m.gram()));
    try {
        const auto& g = GeneratorSet::cached(m);
        Json gens = Json::array();
        for (const auto& x : g.generators())
            gens.push_back({{"name", x.name},
                            {"root", ints_json(x.root.coeffs())},
                            {"root_text", x.root.to_string()},
                            {"root_square", int_to_json(square(x.root))}});
        r["generators"] = gens;
        r["expected_system"] = g.expected_system().name();
        r["coxeter"] = to_json(g.expected_system());
        r["graph"] = render_ascii(g.expected_system());
    } catch (const PreconditionError&) {
        r["generators"] = nullptr;
    }
    return r;
}

Json reduction_json(const PeriodReduction& red) {
    const auto& g = GeneratorSet::cached(red.reduced.model());
    return {{"reduced", rats_json(red.reduced.as_list())},
            {"reduced_text", red.reduced.to_string()},
            {"word", strings_json(red.word.names(g))},
            {"boundary_flags", strings_json(red.boundary_flags)}};
}

CoxeterSystem system_param(Reader& r) {
    if (r.has("coxeter"))
        return coxeter_from_json(r.get("coxeter"));
    return CoxeterSystem::by_name(r.string("system"));
}

Json system_flags(const Flags& f) {
    auto s = need(f, "system");
    CoxeterSystem::by_name(s);
    return {{"system", s}};
}

std::string qs(const QSqrt2& x) { return x.to_string(); }

std::optional<CrystallographicStructure> standard_structure(const std::string& name) {
    auto sys = CoxeterSystem::by_name(name);
    if (name == "L3-4-inf")
        return standard_structure_L3_4_inf();
    if (name == "L4-3-4-4")
        return standard_structure_BE(4);
    if (name.rfind("BE", 0) == 0)
        return standard_structure_BE(sys.rank());
    if (name.rfind("BD", 0) == 0 || name == "L3-4-4")
        return standard_structure_BD(sys.rank());
    return std::nullopt;
}

Json candidate_json(const SphereCandidate& c) {
    return {{"k", int_to_json(c.k)}, {"m", ints_json(c.m)}};
}

std::vector<Command> commands() {
    std::vector<Command> cs;

    cs.push_back({"manifold-info",
                  "intersection form, signature and generators of a model",
                  {kModel, kEll, kGenus},
                  [](const Flags& f) { return Json{{"model", model_flags(f)}}; },
                  [](const Json& p) {
                      Reader r(p, "manifold-info");
                      auto m = r.model();
                      r.finish();
                      return Outcome{manifold_info(m)};
                  }});

    cs.push_back({"pair",
                  "intersection pairing of two classes",
                  {kModel, kEll, kGenus, {"a", "coefficients of the first class"},
                   {"b", "coefficients of the second class"}},
                  [](const Flags& f) {
                      return Json{{"model", model_flags(f)}, {"a", ints_flag(f, "a")}, {"b", ints_flag(f, "b")}};
                  },
                  [](const Json& p) {
                      Reader r(p, "pair");
                      auto m = r.model();
                      auto a = class_of(m, r.ints("a"));
                      auto b = class_of(m, r.ints("b"));
                      r.finish();
                      return Outcome{{{"pairing", int_to_json(pairing(a, b))},
                                      {"a_square", int_to_json(square(a))},
                                      {"b_square", int_to_json(square(b))},
                                      {"a_text", a.to_string()},
                                      {"b_text", b.to_string()}}};
                  }});

    cs.push_back({"reflect",
                  "reflection along a (-1)- or (-2)-class, optionally applied to a class",
                  {kModel, kEll, kGenus, {"root", "coefficients of the root"}, {"class", "class to reflect"}},
                  [](const Flags& f) {
                      Json p{{"model", model_flags(f)}, {"root", ints_flag(f, "root")}};
                      if (given(f, "class"))
                          p["class"] = ints_flag(f, "class");
                      return p;
                  },
                  [](const Json& p) {
                      Reader r(p, "reflect");
                      auto m = r.model();
                      auto root = class_of(m, r.ints("root"));
                      std::optional<HomologyClass> c;
                      if (r.has("class"))
                          c = class_of(m, r.ints("class"));
                      r.finish();
                      auto a = reflection_along(root);
                      Json res{{"root_square", int_to_json(square(root))}, {"matrix", to_json(a.matrix())}};
                      if (c) {
                          auto img = a.apply(*c);
                          res["image"] = ints_json(img.coeffs());
                          res["image_text"] = img.to_string();
                      }
                      return Outcome{res};
                  }});

    cs.push_back({"orbit",
                  "bounded orbit of a class under the generators",
                  {kModel, kEll, kGenus, {"seed", "coefficients of the seed class"},
                   {"bound", "max |coefficient| kept"}, {"generators", "comma-separated generator names"}},
                  [](const Flags& f) {
                      Json p{{"model", model_flags(f)}, {"seed", ints_flag(f, "seed")}, {"bound", int_flag(f, "bound")}};
                      if (given(f, "generators"))
                          p["generators"] = names_flag(f, "generators");
                      return p;
                  },
                  [](const Json& p) {
                      Reader r(p, "orbit");
                      auto m = r.model();
                      auto seed = class_of(m, r.ints("seed"));
                      Int bound = r.integer("bound");
                      if (bound < 0)
                          throw ValidationError("orbit: bound must be non-negative");
                      const auto& g = GeneratorSet::cached(m);
                      std::vector<size_t> subset;
                      if (r.has("generators"))
                          for (const auto& n : r.strings("generators"))
                              subset.push_back(g.index_of(n));
                      r.finish();
                      auto o = orbit(g, seed, bound, subset);
                      Json vs = Json::array();
                      for (const auto& c : o.classes)
                          vs.push_back(ints_json(c.coeffs()));
                      return Outcome{{{"size", o.classes.size()}, {"truncated", o.truncated}, {"vectors", vs}}};
                  }});

    cs.push_back({"reduce-periods",
                  "move a period vector into the fundamental domain",
                  {kModel, kEll, kGenus, {"periods", "lambda,mu1,... or sigma,nu,mu1,... (exact rationals)"}},
                  [](const Flags& f) { return Json{{"model", model_flags(f)}, {"periods", rats_flag(f, "periods")}}; },
                  [](const Json& p) {
                      Reader r(p, "reduce-periods");
                      auto m = r.model();
                      auto pv = PeriodVector::from_list(m, r.rats("periods"));
                      r.finish();
                      return Outcome{reduction_json(reduce_periods(pv))};
                  }});

    cs.push_back({"reduce-class",
                  "transport a (-1)-class to E_l, or report that it is not in the orbit",
                  {kModel, kEll, kGenus, {"class", "coefficients of the class"}},
                  [](const Flags& f) { return Json{{"model", model_flags(f)}, {"class", ints_flag(f, "class")}}; },
                  [](const Json& p) {
                      Reader r(p, "reduce-class");
                      auto m = r.model();
                      auto c = class_of(m, r.ints("class"));
                      r.finish();
                      const auto& g = GeneratorSet::cached(m);
                      auto red = reduce_class(g, c);
                      return Outcome{{{"in_orbit", red.in_orbit},
                                      {"canonical", ints_json(red.canonical.coeffs())},
                                      {"canonical_text", red.canonical.to_string()},
                                      {"word", strings_json(red.word.names(g))},
                                      {"k_trace", ints_json(red.k_trace)}}};
                  }});

    cs.push_back({"lagrangian-system",
                  "zero-period walls of reduced periods and their Coxeter type",
                  {kModel, kEll, kGenus, {"periods", "reduced period vector"}},
                  [](const Flags& f) { return Json{{"model", model_flags(f)}, {"periods", rats_flag(f, "periods")}}; },
                  [](const Json& p) {
                      Reader r(p, "lagrangian-system");
                      auto m = r.model();
                      auto pv = PeriodVector::from_list(m, r.rats("periods"));
                      r.finish();
                      auto sys = lagrangian_system(pv);
                      auto box = maximal_system_membership(sys);
                      auto names = wall_names(m);
                      Json comps = Json::array();
                      for (const auto& c : sys.components) {
                          Json v = Json::array();
                          for (size_t i : c.vertices)
                              v.push_back(sys.class_names.at(i));
                          comps.push_back({{"type", std::string(1, c.series) + std::to_string(c.rank)}, {"walls", v}});
                      }
                      Json walls = Json::array();
                      for (size_t w : box.walls)
                          walls.push_back(names.at(w));
                      Json res{{"members", strings_json(sys.class_names)},
                               {"type", sys.type},
                               {"alias", sys.alias.empty() ? Json(nullptr) : Json(sys.alias)},
                               {"finite", !sys.subsystem || is_finite_type(*sys.subsystem)},
                               {"components", comps},
                               {"container", box.label},
                               {"container_walls", walls}};
                      if (sys.subsystem)
                          res["graph"] = render_ascii(*sys.subsystem);
                      return Outcome{res};
                  }});

    cs.push_back({"coxeter-check",
                  "check the Coxeter presentation of the generators on H2",
                  {kModel, kEll, kGenus},
                  [](const Flags& f) { return Json{{"model", model_flags(f)}}; },
                  [](const Json& p) {
                      Reader r(p, "coxeter-check");
                      auto m = r.model();
                      r.finish();
                      const auto& g = GeneratorSet::cached(m);
                      auto rep = verify_presentation(g);
                      Json pairs = Json::array();
                      for (const auto& q : rep.pairs)
                          pairs.push_back({{"i", g[q.i].name},
                                           {"j", g[q.j].name},
                                           {"expected", label_json(q.expected)},
                                           {"observed", q.observed ? Json(*q.observed) : Json("inf")}});
                      Outcome o{{{"system", g.expected_system().name()},
                                 {"graph", render_ascii(g.expected_system())},
                                 {"involutions", rep.involutions},
                                 {"pairs", pairs},
                                 {"ok", rep.ok()}}};
                      if (!rep.ok())
                          o.code = kInternal;
                      return o;
                  }});

    cs.push_back({"coxeter-finite",
                  "exact finite-type test via the leading minors of -Gram",
                  {{"system", "E6..E9, BEn, BDn, An, Bn, Dn, B~n, L4-3-4-4, L3-4-inf, L3-4-4, I2-inf"}},
                  system_flags,
                  [](const Json& p) {
                      Reader r(p, "coxeter-finite");
                      auto s = system_param(r);
                      r.finish();
                      Json minors = Json::array();
                      for (const auto& x : leading_minors_of_negated_gram(s))
                          minors.push_back(qs(x));
                      bool fin = is_finite_type(s);
                      return Outcome{{{"system", s.name()},
                                      {"rank", s.rank()},
                                      {"graph", render_ascii(s)},
                                      {"minors", minors},
                                      {"finite", fin},
                                      {"verdict", fin ? "finite" : "infinite"}}};
                  }});

    cs.push_back({"crystal-check",
                  "crystallographic structure and lattice invariance of the rewritten generators",
                  {{"system", "named Coxeter system"},
                   {"short", "comma-separated short generator indices"},
                   {"long", "comma-separated long generator indices"}},
                  [](const Flags& f) {
                      Json p = system_flags(f);
                      if (given(f, "short") != given(f, "long"))
                          throw ValidationError("--short and --long go together");
                      if (given(f, "short")) {
                          p["short"] = ints_flag(f, "short");
                          p["long"] = ints_flag(f, "long");
                      }
                      return p;
                  },
                  [](const Json& p) {
                      Reader r(p, "crystal-check");
                      std::string name = r.string("system");
                      auto sys = CoxeterSystem::by_name(name);
                      std::optional<CrystallographicStructure> cs;
                      if (r.has("short") || r.has("long")) {
                          auto sh = indices(r.ints("short"), sys.rank(), "short");
                          auto lo = indices(r.ints("long"), sys.rank(), "long");
                          cs = CrystallographicStructure{sys, {sh.begin(), sh.end()}, {lo.begin(), lo.end()}};
                      } else {
                          cs = standard_structure(name);
                          if (!cs)
                              throw ValidationError("no standard structure for " + name + "; pass --short/--long");
                      }
                      r.finish();
                      Json res{{"system", sys.name()},
                               {"short", Json(std::vector<size_t>(cs->short_set.begin(), cs->short_set.end()))},
                               {"long", Json(std::vector<size_t>(cs->long_set.begin(), cs->long_set.end()))}};
                      bool ok = verify_crystallographic(*cs);
                      res["crystallographic"] = ok;
                      if (!ok) {
                          res["lattice_invariant"] = nullptr;
                          return Outcome{res};
                      }
                      res["graph"] = render_ascii(cs->system, cs);
                      res["lattice_invariant"] = crystallographic_lattice_invariance(*cs);
                      Json mats = Json::array();
                      for (const auto& g : crystallographic_generators(*cs)) {
                          Json rows = Json::array();
                          for (size_t i = 0; i < g.rows(); ++i) {
                              Json row = Json::array();
                              for (size_t j = 0; j < g.cols(); ++j)
                                  row.push_back(qs(g(i, j)));
                              rows.push_back(row);
                          }
                          mats.push_back(rows);
                      }
                      res["generators"] = mats;
                      return Outcome{res};
                  }});

    cs.push_back({"sw-check",
                  "certify a sphere class kL - sum m_i E_i with 1 <= -[S]^2 <= 4",
                  {{"k", "coefficient of L"}, {"m", "comma-separated m_i"}},
                  [](const Flags& f) { return Json{{"k", int_flag(f, "k")}, {"m", ints_flag(f, "m")}}; },
                  [](const Json& p) {
                      Reader r(p, "sw-check");
                      SphereCandidate c{r.integer("k"), r.ints("m")};
                      r.finish();
                      auto n = c.normalized();
                      auto cert = e_sw_certify(n);
                      Int top = 0;
                      for (size_t i = 0; i < 3 && i < n.m.size(); ++i)
                          top += n.m[i];
                      Json res{{"normalized", candidate_json(n)},
                               {"q", int_to_json(n.q())},
                               {"top3_sum", int_to_json(top)},
                               {"inequality", n.k >= 2 ? Json(sw_inequality_holds(n)) : Json(nullptr)},
                               {"verdict", to_string(cert.verdict)}};
                      if (cert.verdict == Verdict::DolgachevException)
                          res["dolgachev_m"] = int_to_json(cert.dolgachev_m);
                      return Outcome{res, cert.verdict == Verdict::Violation ? kCounterexample : kOk};
                  }});

    cs.push_back({"sw-search",
                  "all q = 1 candidates with k >= m1+m2+m3 up to k-max",
                  {kEll, {"k-max", "largest k searched (<= 100000)"}},
                  [](const Flags& f) { return Json{{"ell", int_flag(f, "ell")}, {"k_max", int_flag(f, "k-max")}}; },
                  [](const Json& p) {
                      Reader r(p, "sw-search");
                      unsigned ell = r.small("ell", 0, 1000);
                      unsigned kmax = r.small("k_max", 0, 100000);
                      r.finish();
                      auto found = dichotomy_search(ell, kmax);
                      Json cands = Json::array();
                      bool violation = false;
                      for (const auto& c : found) {
                          auto v = e_sw_certify(c).verdict;
                          violation = violation || v == Verdict::Violation;
                          Json cj = candidate_json(c);
                          cj["verdict"] = to_string(v);
                          cands.push_back(cj);
                      }
                      return Outcome{{{"count", found.size()}, {"candidates", cands}, {"violation", violation}},
                                     violation ? kCounterexample : kOk};
                  }});

    cs.push_back({"extremal",
                  "maximal sum m_i^2 subject to m1+m2+m3 <= k",
                  {{"k", "bound on m1+m2+m3"}, kEll},
                  [](const Flags& f) { return Json{{"k", int_flag(f, "k")}, {"ell", int_flag(f, "ell")}}; },
                  [](const Json& p) {
                      Reader r(p, "extremal");
                      Int k = r.integer("k");
                      unsigned ell = r.small("ell", 0, 100000);
                      r.finish();
                      auto e = extremal_sequence(k, ell);
                      return Outcome{{{"m", ints_json(e.m)},
                                      {"sum_of_squares", int_to_json(e.sum_of_squares)},
                                      {"reaches_k2_plus_1", e.sum_of_squares >= k * k + 1}}};
                  }});

    cs.push_back({"decompose-o12",
                  "write an element of O+(1,2;Z) as a word in s1, s2, s0*",
                  {{"matrix", "rows separated by ';', entries by ','"}},
                  [](const Flags& f) { return Json{{"matrix", matrix_flag(f, "matrix")}}; },
                  [](const Json& p) {
                      Reader r(p, "decompose-o12");
                      auto mat = int_matrix_from_json(r.get("matrix"));
                      r.finish();
                      auto m = ManifoldModel::rational(2);
                      if (mat.rows() != 3 || mat.cols() != 3)
                          throw ValidationError("decompose-o12 needs a 3x3 matrix");
                      if (!preserves_form(m, mat))
                          throw PreconditionError("matrix does not preserve diag(1,-1,-1)");
                      LatticeAutomorphism a(m, mat);
                      auto w = decompose_O12(a);
                      const auto& g = GeneratorSet::cached(m);
                      if (w.evaluate(g) != a)
                          throw InternalConsistencyError("decomposition does not evaluate to the input");
                      return Outcome{{{"word", strings_json(w.names(g))}, {"length", w.size()}, {"verified", true}}};
                  }});

    cs.push_back({"describe",
                  "structure of the diffeotopy group, by label or by model",
                  {{"label", "CP2, S2xS2, S2~xS2, YxS2, Y~xS2, (S2xS2)#CP2bar, (YxS2)#CP2bar"}, kModel, kEll, kGenus},
                  [](const Flags& f) {
                      if (given(f, "label")) {
                          if (given(f, "model") || given(f, "ell"))
                              throw ValidationError("--label excludes --model/--ell");
                          Json p{{"label", need(f, "label")}};
                          if (given(f, "genus"))
                              p["genus"] = int_flag(f, "genus");
                          return p;
                      }
                      return Json{{"model", model_flags(f)}};
                  },
                  [](const Json& p) {
                      Reader r(p, "describe");
                      std::optional<GroupDescription> d;
                      if (r.has("label")) {
                          auto label = r.string("label");
                          unsigned genus = r.has("genus") ? r.small("genus", 0, 1000000) : 1;
                          d = describe_diffeotopy(label, genus);
                      } else {
                          d = describe_diffeotopy(r.model());
                      }
                      r.finish();
                      return Outcome{to_json(*d)};
                  }});

    return cs;
}

// ---------------------------------------------------------------------------
// Text rendering: "key  value" with keys padded to a common width.

bool scalar(const Json& j) { return !j.is_structured(); }

std::string scalar_text(const Json& j) {
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_null())
        return "-";
    return j.dump();
}

void render_value(std::ostream& os, const Json& v, const std::string& indent) {
    if (scalar(v)) {
        std::string s = scalar_text(v);
        if (s.find('\n') == std::string::npos) {
            os << s << "\n";
            return;
        }
        os << "\n";
        std::istringstream is(s);
        for (std::string line; std::getline(is, line);)
            os << indent << line << "\n";
        return;
    }
    if (v.is_array() && std::all_of(v.begin(), v.end(), scalar)) {
        std::string sep;
        os << "[";
        for (const auto& x : v) {
            os << sep << scalar_text(x);
            sep = ", ";
        }
        os << "]\n";
        return;
    }
    // matrices (right-aligned columns) and lists of records, one per line
    if (v.is_array()) {
        std::vector<size_t> width;
        for (const auto& x : v)
            if (x.is_array() && std::all_of(x.begin(), x.end(), scalar))
                for (size_t k = 0; k < x.size(); ++k) {
                    width.resize(std::max(width.size(), x.size()), 0);
                    width[k] = std::max(width[k], scalar_text(x[k]).size());
                }
        os << "\n";
        for (const auto& x : v) {
            os << indent;
            if (x.is_array() && std::all_of(x.begin(), x.end(), scalar)) {
                for (size_t k = 0; k < x.size(); ++k) {
                    std::string t = scalar_text(x[k]);
                    os << (k ? " " : "") << std::string(width[k] - t.size(), ' ') << t;
                }
                os << "\n";
            } else {
                os << x.dump() << "\n";
            }
        }
        return;
    }
    os << v.dump() << "\n";
}

void render_text(std::ostream& os, const Json& result) {
    size_t w = 0;
    for (auto it = result.begin(); it != result.end(); ++it)
        w = std::max(w, it.key().size());
    for (auto it = result.begin(); it != result.end(); ++it) {
        os << it.key() << std::string(w - it.key().size() + 2, ' ');
        render_value(os, it.value(), "    ");
    }
}

Json read_input(const std::string& source, std::istream& in) {
    std::string text;
    if (source == "-") {
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    } else {
        std::ifstream f(source);
        if (!f)
            throw ValidationError("cannot open " + source);
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        // nlohmann reports "line L, column C" plus the byte offset
        throw ParseError(std::string("malformed JSON input: ") + e.what() + " (byte " +
                         std::to_string(e.byte) + ")");
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
    auto cmds = commands();
    CLI::App app{"Lattice computations for rational and ruled 4-manifolds", "ruled-lattice"};
    app.require_subcommand(1);
    struct Bound {
        const Command* cmd;
        CLI::App* sub;
        Flags values;
        std::map<std::string, CLI::Option*> opts;
        bool json = false;
        std::string input;
        CLI::Option* input_opt = nullptr;
    };
    std::vector<std::unique_ptr<Bound>> bound;
    for (const auto& c : cmds) {
        auto b = std::make_unique<Bound>();
        b->cmd = &c;
        b->sub = app.add_subcommand(c.name, c.help);
        for (const auto& [name, help] : c.flags) {
            b->values[name];
            b->opts[name] = b->sub->add_option("--" + name, b->values[name], help);
        }
        b->sub->add_flag("--json", b->json, "machine-readable output");
        b->input_opt = b->sub->add_option("--input", b->input, "JSON parameters from a file, or - for stdin");
        bound.push_back(std::move(b));
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    Bound* sel = nullptr;
    for (auto& b : bound)
        if (b->sub->parsed())
            sel = b.get();
    if (!sel) {
        err << "error: no subcommand\n";
        return kUsage;
    }
    const Command& cmd = *sel->cmd;

    try {
        Flags given_flags;
        for (const auto& [name, opt] : sel->opts)
            if (opt->count() > 0)
                given_flags[name] = sel->values[name];

        Json params;
        if (sel->input_opt->count() > 0) {
            if (!given_flags.empty())
                throw ValidationError("--input cannot be combined with other parameter flags");
            Json doc = read_input(sel->input, in);
            if (doc.is_object() && doc.contains("command")) {
                if (doc["command"] != cmd.name)
                    throw ValidationError("input document is for \"" + doc["command"].dump() + "\", not " +
                                          cmd.name);
                if (!doc.contains("input"))
                    throw ValidationError("input document has no \"input\" field");
                params = doc["input"];
            } else {
                params = doc;
            }
        } else {
            params = cmd.from_flags(given_flags);
        }

        Outcome o = cmd.exec(params);
        if (sel->json) {
            Json doc{{"command", cmd.name}, {"input", params}, {"result", o.result}};
            out << doc.dump(2) << "\n";
        } else {
            render_text(out, o.result);
        }
        return o.code;
    } catch (const InternalConsistencyError& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const PresentationViolation& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Json::exception& e) {
        err << "error: invalid input: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    return run(args, out, err, std::cin);
}

} // namespace ruled::cli
