#include "gideal/commands.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "gideal/example_suite.hpp"
#include "gideal/ideal_classes.hpp"
#include "gideal/newton.hpp"

namespace gideal {

using nlohmann::json;

namespace {

json generators_json(const MonomialIdeal& ideal, const std::vector<std::string>& names) {
  json out = json::array();
  for (const auto& g : ideal.generators()) out.push_back(to_string(g, names));
  return out;
}

json prime_json(CoordinatePrime p, const std::vector<std::string>& names) {
  return {{"index", p.omitted + 1}, {"variable", names.at(p.omitted)}};
}

// "P<k>" labels produced by is_in_G, mapped back to the variable they omit.
json prime_json(const std::string& label, const std::vector<std::string>& names) {
  const auto k = std::stoul(label.substr(1));
  return prime_json(CoordinatePrime{k - 1}, names);
}

json gform_json(const GForm& g, const std::vector<std::string>& names) {
  json primes = json::object();
  for (const auto& [label, a] : g.components()) {
    primes[label] = {{"prime", prime_json(label, names)},
                     {"staircase", a.values()},
                     {"exponents", prime_exponents(a)}};
  }
  return {{"order", g.order()}, {"primes", primes}};
}

json classify(const MonomialIdeal& ideal, const std::vector<std::string>& names) {
  json out;
  const auto stats = basic_stats(ideal);
  out["generators"] = generators_json(ideal, names);
  out["order"] = ideal.is_zero() ? json(nullptr) : json(stats.order);
  out["mu"] = stats.mu;
  out["colength"] = stats.colength ? json(*stats.colength) : json(nullptr);
  json reasons = json::object();

  if (ideal.is_zero() || ideal.is_unit()) {
    out["contracted"] = nullptr;
    reasons["contracted"] = "defined for proper nonzero ideals only";
  } else {
    auto v = is_contracted(ideal);
    out["contracted"] = v.holds;
    if (!v) reasons["contracted"] = v.reason;
  }

  auto c = is_in_C(ideal);
  out["in_C"] = c.holds;
  if (!c) {
    reasons["in_C"] = c.reason;
    for (const char* key : {"in_D", "in_G", "in_G_star"}) {
      out[key] = false;
      reasons[key] = "not in C";
    }
  } else {
    auto d = is_in_D(ideal);
    out["in_D"] = d.holds;
    if (!d) reasons["in_D"] = d.reason;
    auto g = is_in_G(ideal);
    out["in_G"] = g.form.has_value();
    if (g.form) {
      out["gform"] = gform_json(*g.form, names);
    } else {
      reasons["in_G"] = g.reason;
    }
    out["in_G_star"] = g.form.has_value() && d.holds;
    if (!out["in_G_star"].get<bool>()) reasons["in_G_star"] = g.form ? "not integrally closed" : "not in G";
  }
  out["reasons"] = reasons;
  return out;
}

json factor(const MonomialIdeal& ideal, const std::vector<std::string>& names) {
  const auto f = factor_C(ideal);
  json factors = json::array();
  for (const auto& l : f.factors) {
    json fam = json::array();
    for (const auto& q : l.family.members()) fam.push_back(generators_json(q, names));
    factors.push_back({{"prime", prime_json(l.prime, names)},
                       {"generators", generators_json(l.ideal, names)},
                       {"order", l.order},
                       {"q_family", fam}});
  }
  return {{"order", ideal.order()}, {"factors", factors}, {"balance", {{"s", f.s}, {"r", f.r}}}};
}

json close(const MonomialIdeal& ideal, const std::vector<std::string>& names) {
  const auto closed = newton_closure(ideal);
  return {{"generators", generators_json(closed, names)}, {"was_closed", closed == ideal}};
}

json simple_factor(const MonomialIdeal& ideal, const std::vector<std::string>& names) {
  if (auto c = is_in_C(ideal); !c) throw PreconditionError("ideal not in C: " + c.reason);
  auto g = is_in_G(ideal);
  if (!g.form) throw PreconditionError("ideal not in G: " + g.reason);
  if (!gform_is_closed(*g.form)) throw PreconditionError("ideal is not integrally closed");
  const auto f = gform_simple_factorization(*g.form);
  json factors = json::array();
  for (const auto& [label, sf] : f.per_prime) {
    for (const auto& s : sf.factors) {
      factors.push_back(
          {{"prime", prime_json(label, names)}, {"d", s.d}, {"t", s.t}, {"multiplicity", s.multiplicity}});
    }
  }
  // I * M^s = M^c * prod J
  return {{"m_power", std::max<std::int64_t>(0, f.m_exponent)},
          {"balance", std::max<std::int64_t>(0, -f.m_exponent)},
          {"factors", factors}};
}

json hilbert(const MonomialIdeal& ideal, const CommandOptions& options) {
  const auto hs = h_polynomial(ideal, options.budget);
  const auto e = multiplicity_e(ideal, options.budget);
  json out = {{"h", hs.h()}, {"e", e.e}, {"colength", hs.colength()}, {"degree", hs.degree()}};
  if (e.from_factors) out["e_from_factors"] = *e.from_factors;
  return out;
}

CommandResult verify_examples() {
  CommandResult out;
  json checks = json::array();
  bool all = true;
  for (const auto& c : run_example_suite()) {
    json entry = {{"name", c.name}, {"passed", c.passed}};
    if (!c.passed) entry["detail"] = c.detail;
    all = all && c.passed;
    checks.push_back(std::move(entry));
  }
  out.report = {{"command", "verify-examples"}, {"checks", checks}, {"all_passed", all}};
  out.exit_code = all ? kExitOk : kExitMathFailure;
  return out;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"classify", "factor", "close", "simple-factor", "hilbert",
                                              "verify-examples"};
  return names;
}

CommandResult run_command(std::string_view cmd, const std::optional<IdealDocument>& doc,
                          const CommandOptions& options) {
  CommandResult out;
  if (cmd == "verify-examples") return verify_examples();

  std::function<json(const MonomialIdeal&, const std::vector<std::string>&)> per_ideal;
  if (cmd == "classify") {
    per_ideal = classify;
  } else if (cmd == "factor") {
    per_ideal = factor;
  } else if (cmd == "close") {
    per_ideal = close;
  } else if (cmd == "simple-factor") {
    per_ideal = simple_factor;
  } else if (cmd == "hilbert") {
    per_ideal = [&options](const MonomialIdeal& i, const std::vector<std::string>&) { return hilbert(i, options); };
  } else {
    out.report = {{"error", "unknown command " + std::string(cmd)}};
    out.exit_code = kExitUsage;
    return out;
  }
  if (!doc) {
    out.report = {{"error", "command " + std::string(cmd) + " needs an input document"}};
    out.exit_code = kExitUsage;
    return out;
  }
  if (options.budget < 1) {
    out.report = {{"error", "term budget must be positive"}};
    out.exit_code = kExitUsage;
    return out;
  }

  json ideals = json::object();
  for (const auto& ni : doc->ideals()) {
    try {
      ideals[ni.name] = per_ideal(ni.ideal, doc->vars());
    } catch (const Error& e) {
      ideals[ni.name] = {{"error", e.what()}};
      out.exit_code = kExitMathFailure;
    }
  }
  out.report = {{"command", std::string(cmd)}, {"ideals", ideals}};
  return out;
}

namespace {

void render(const json& value, const std::string& indent, std::ostringstream& os) {
  for (const auto& [key, v] : value.items()) {
    const bool leaf_array = v.is_array() && std::none_of(v.begin(), v.end(), [](const json& x) {
                              return x.is_object() || x.is_array();
                            });
    if (v.is_object() || (v.is_array() && !leaf_array)) {
      os << indent << key << ":\n";
      render(v, indent + "  ", os);
    } else if (v.is_string()) {
      os << indent << key << ": " << v.get<std::string>() << '\n';
    } else if (leaf_array) {
      os << indent << key << ": [";
      bool first = true;
      for (const auto& x : v) {
        os << (first ? "" : ", ") << (x.is_string() ? x.get<std::string>() : x.dump());
        first = false;
      }
      os << "]\n";
    } else {
      os << indent << key << ": " << v.dump() << '\n';
    }
  }
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream os;
  render(report, "", os);
  return os.str();
}

}  // namespace gideal
