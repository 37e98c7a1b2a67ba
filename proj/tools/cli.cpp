#include "cli.hpp"

#include "hk/criterion.hpp"
#include "hk/errors.hpp"
#include "hk/fano.hpp"
#include "hk/jacobi.hpp"
#include "hk/rational.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <optional>
#include <sstream>

namespace hkcli {

using hk::Rational;
using Json = nlohmann::ordered_json;

namespace {

struct OptionSpec {
  std::string name;
  bool required;
  std::string default_value; // empty: no default
  std::string description;
};

const std::vector<std::string> kCoeffForms = {"f", "g", "phi", "phi-pow-over-delta"};
const std::vector<std::string> kSeriesForms = {"theta",  "theta-squared", "phi01", "phi",
                                               "f",      "g",             "delta", "e2",
                                               "e4",     "e6",            "phi-pow-over-delta"};

long parse_int_flag(const std::string& flag, const std::string& text) {
  try {
    std::size_t used = 0;
    const long v = std::stol(text, &used);
    if (used == text.size())
      return v;
  } catch (const std::exception&) {
  }
  throw UsageError("--" + flag + ": expected an integer, got '" + text + "'");
}

Rational parse_rational_flag(const std::string& flag, const std::string& text) {
  try {
    return hk::parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw UsageError("--" + flag + ": expected p/q or an integer, got '" + text + "'");
  }
}

void require_member(const std::string& flag, const std::string& value,
                    const std::vector<std::string>& allowed) {
  if (std::find(allowed.begin(), allowed.end(), value) != allowed.end())
    return;
  std::string list;
  for (const auto& a : allowed)
    list += (list.empty() ? "" : ", ") + a;
  throw UsageError("--" + flag + ": '" + value + "' is not one of " + list);
}

// Validates (n, norm, residue) and returns the residue to use. When the
// residue is omitted it is inferred if exactly one residue set is admissible.
int resolve_residue(long n, const Rational& norm, const std::optional<long>& residue) {
  if (n < 1)
    throw UsageError("--n: must be at least 1, got " + std::to_string(n));
  if (n == 1) {
    if (!hk::is_integer(norm) || norm.get_num() % 2 != 0)
      throw UsageError("--norm: for n = 1 the norm must be an even integer, got " +
                       hk::to_string(norm));
    if (residue && *residue != 0)
      throw UsageError("--residue: for n = 1 the residue set is {0}");
    return 0;
  }
  const long modulus = 2 * n - 2;
  if (hk::Integer(modulus) % norm.get_den() != 0)
    throw UsageError("--norm: denominator of " + hk::to_string(norm) + " does not divide 2n-2 = " +
                     std::to_string(modulus));
  if (residue) {
    try {
      hk::BetaClass::make(static_cast<int>(n), norm, static_cast<int>(*residue));
    } catch (const hk::InadmissiblePair& e) {
      throw UsageError("--residue: " + std::string(e.what()));
    }
    return static_cast<int>(*residue);
  }
  std::vector<int> candidates;
  for (int rho = 0; rho <= n - 1; ++rho) {
    try {
      hk::BetaClass::make(static_cast<int>(n), norm, rho);
      candidates.push_back(rho);
    } catch (const hk::InadmissiblePair&) {
    }
  }
  if (candidates.empty())
    throw UsageError("--norm: " + hk::to_string(norm) + " is not admissible for any residue at n = " +
                     std::to_string(n));
  if (candidates.size() > 1) {
    std::string list;
    for (int c : candidates)
      list += (list.empty() ? "" : ", ") + std::string("+-") + std::to_string(c);
    throw UsageError("--residue: required, norm " + hk::to_string(norm) +
                     " is admissible for residues " + list);
  }
  return candidates.front();
}

std::optional<long> optional_int(const std::map<std::string, std::string>& raw,
                                 const std::string& name) {
  const auto it = raw.find(name);
  if (it == raw.end())
    return std::nullopt;
  return parse_int_flag(name, it->second);
}

std::map<std::string, std::string> validate(const std::string& sub,
                                            std::map<std::string, std::string> raw) {
  std::map<std::string, std::string> opts;
  if (sub == "uniruled" || sub == "coeff") {
    long n = parse_int_flag("n", raw.at("n"));
    const Rational norm = parse_rational_flag("norm", raw.at("norm"));
    if (sub == "coeff") {
      require_member("form", raw.at("form"), kCoeffForms);
      if (raw.at("form") != "phi-pow-over-delta" && n != 2)
        throw UsageError("--n: form " + raw.at("form") + " has index 1 and needs n = 2");
      opts["form"] = raw.at("form");
      if (auto q = optional_int(raw, "qprec")) {
        if (*q < 1)
          throw UsageError("--qprec: must be positive");
        opts["qprec"] = std::to_string(*q);
      }
    }
    const int residue = resolve_residue(n, norm, optional_int(raw, "residue"));
    opts["n"] = std::to_string(n);
    opts["norm"] = hk::to_string(norm);
    opts["residue"] = std::to_string(residue);
    if (sub == "uniruled" && raw.count("witness")) {
      opts["witness"] = "true";
      for (const char* name : {"r-bound", "d-bound"}) {
        const long b = parse_int_flag(name, raw.at(name));
        if (b < 0)
          throw UsageError(std::string("--") + name + ": must be nonnegative");
        opts[name] = std::to_string(b);
      }
    }
  } else if (sub == "table") {
    require_member("which", raw.at("which"), {"multiplicities", "eigenvalues"});
    opts["which"] = raw.at("which");
    opts["max-norm"] = hk::to_string(parse_rational_flag("max-norm", raw.at("max-norm")));
  } else if (sub == "series") {
    require_member("form", raw.at("form"), kSeriesForms);
    const long q = parse_int_flag("qprec", raw.at("qprec"));
    if (q < 2)
      throw UsageError("--qprec: must be at least 2");
    const long n = parse_int_flag("n", raw.at("n"));
    if (n < 1)
      throw UsageError("--n: must be at least 1");
    opts["form"] = raw.at("form");
    opts["qprec"] = std::to_string(q);
    if (raw.at("form") == "phi-pow-over-delta")
      opts["n"] = std::to_string(n);
  } else if (sub == "fano verify") {
    if (raw.at("action") != "verify")
      throw UsageError("fano: unknown action '" + raw.at("action") + "', expected 'verify'");
  } else if (sub == "sweep") {
    const long d = parse_int_flag("max-d", raw.at("max-d"));
    if (d < 2)
      throw UsageError("--max-d: must be at least 2");
    opts["max-d"] = std::to_string(d);
  }
  return opts;
}

} // namespace

Invocation parse(const std::vector<std::string>& args) {
  CLI::App app{"Exact computations for rational curves on K3[n]-type varieties", "hkcurves"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Print a single JSON object instead of text");

  const std::map<std::string, std::vector<OptionSpec>> specs = {
      {"uniruled",
       {{"n", true, "", "Half the dimension of X"},
        {"norm", true, "", "Norm (beta, beta) as p/q"},
        {"residue", false, "", "Residue r of beta mod 2n-2 (inferred when unique)"},
        {"r-bound", false, "6", "Witness search bound on |r_i|"},
        {"d-bound", false, "12", "Witness search bound on d_i"}}},
      {"coeff",
       {{"form", false, "phi-pow-over-delta", "f, g, phi or phi-pow-over-delta"},
        {"n", false, "2", "Half the dimension of X"},
        {"norm", true, "", "Norm as p/q"},
        {"residue", false, "", "Residue mod 2n-2 (inferred when unique)"},
        {"qprec", false, "", "Raise the working q-precision"}}},
      {"table",
       {{"which", true, "", "multiplicities or eigenvalues"},
        {"max-norm", false, "6", "Largest norm listed"}}},
      {"series",
       {{"form", true, "", "Form to expand"},
        {"qprec", false, "12", "Number of q-orders"},
        {"n", false, "2", "n for phi-pow-over-delta"}}},
      {"sweep", {{"max-d", false, "6", "Largest q-order inspected"}}},
  };

  std::map<std::string, std::map<std::string, std::string>> storage;
  std::map<std::string, std::map<std::string, CLI::Option*>> handles;
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, options] : specs) {
    CLI::App* sub = app.add_subcommand(name);
    subs[name] = sub;
    for (const auto& spec : options) {
      CLI::Option* o = sub->add_option("--" + spec.name, storage[name][spec.name], spec.description);
      if (spec.required)
        o->required();
      handles[name][spec.name] = o;
    }
  }
  CLI::Option* witness_flag = subs["uniruled"]->add_flag("--witness", "Also search for a witness");
  CLI::App* fano = app.add_subcommand("fano", "Intersection numbers on the Fano variety of lines");
  std::string action;
  fano->add_option("action", action, "verify")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    Invocation inv;
    inv.help = app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help();
    return inv;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  Invocation inv;
  inv.output_mode = json ? OutputMode::Json : OutputMode::Text;
  CLI::App* chosen = app.get_subcommands().front();
  std::map<std::string, std::string> raw;
  if (chosen == fano) {
    inv.subcommand = "fano verify";
    raw["action"] = action;
  } else {
    inv.subcommand = chosen->get_name();
    for (const auto& spec : specs.at(inv.subcommand)) {
      if (handles[inv.subcommand][spec.name]->count() > 0)
        raw[spec.name] = storage[inv.subcommand][spec.name];
      else if (!spec.default_value.empty())
        raw[spec.name] = spec.default_value;
    }
    if (inv.subcommand == "uniruled" && witness_flag->count() > 0)
      raw["witness"] = "true";
  }
  inv.options = validate(inv.subcommand, std::move(raw));
  return inv;
}

namespace {

struct Outcome {
  std::string text;
  Json results = Json::object();
  int exit_code = kExitOk;
};

std::string str(const Rational& x) { return hk::to_string(x); }

int coefficient_precision(const hk::BetaClass& beta, int requested) {
  const long d = hk::jcoeff_q_order(beta.index(), beta.norm(), beta.residue());
  return static_cast<int>(std::max<long>({hk::kDefaultPrecision, d + 2, requested}));
}

hk::BetaClass beta_from(const std::map<std::string, std::string>& o) {
  return hk::BetaClass::make(std::stoi(o.at("n")), hk::parse_rational(o.at("norm")),
                             std::stoi(o.at("residue")));
}

Outcome run_uniruled(const std::map<std::string, std::string>& o) {
  Outcome out;
  const hk::BetaClass beta = beta_from(o);
  const hk::UniruledDecision d = hk::decide_uniruled(beta);
  std::ostringstream text;
  text << "exists = " << (d.exists ? "true" : "false") << ", multiplicity = " << str(d.multiplicity)
       << "\n";
  out.results["exists"] = d.exists;
  out.results["multiplicity"] = str(d.multiplicity);
  if (o.count("witness")) {
    const int rb = std::stoi(o.at("r-bound"));
    const int db = std::stoi(o.at("d-bound"));
    const auto w = hk::search_witness(beta, rb, db);
    out.results["witness_found"] = w.has_value();
    if (w) {
      text << "witness =";
      if (w->pairs.empty())
        text << " (empty)";
      for (std::size_t i = 0; i < w->pairs.size(); ++i) {
        text << " (" << w->pairs[i].d << ", " << w->pairs[i].r << ")";
        out.results["witness.d" + std::to_string(i + 1)] = std::to_string(w->pairs[i].d);
        out.results["witness.r" + std::to_string(i + 1)] = std::to_string(w->pairs[i].r);
      }
      text << "\n";
    } else {
      text << "witness = none with |r_i| <= " << rb << ", d_i <= " << db << "\n";
    }
  }
  out.text = text.str();
  return out;
}

Outcome run_coeff(const std::map<std::string, std::string>& o) {
  Outcome out;
  const hk::BetaClass beta = beta_from(o);
  const int requested = o.count("qprec") ? std::stoi(o.at("qprec")) : 0;
  const int q = coefficient_precision(beta, requested);
  const std::string& form = o.at("form");
  hk::JacobiElement element;
  if (form == "f")
    element = hk::named_form(hk::FormName::F, q);
  else if (form == "g")
    element = hk::named_form(hk::FormName::G, q);
  else if (form == "phi")
    element = hk::phi(q);
  else
    element = hk::phi_pow_over_delta(beta.n(), q);
  const Rational c = hk::jcoeff(element, beta.norm(), beta.residue());
  out.text = "coefficient = " + str(c) + "\n";
  out.results["coefficient"] = str(c);
  return out;
}

// Admissible n = 2 norms from -5/2 up to max_norm; each has a unique residue.
std::vector<std::pair<Rational, int>> table_norms(const Rational& max_norm) {
  std::vector<std::pair<Rational, int>> out;
  for (long j = -5; hk::make_rational(j, 2) <= max_norm; ++j) {
    const Rational norm = hk::make_rational(j, 2);
    for (int rho = 0; rho <= 1; ++rho) {
      try {
        hk::BetaClass::make(2, norm, rho);
        out.emplace_back(norm, rho);
      } catch (const hk::InadmissiblePair&) {
      }
    }
  }
  return out;
}

Outcome run_table(const std::map<std::string, std::string>& o) {
  Outcome out;
  std::ostringstream text;
  const bool eigen = o.at("which") == "eigenvalues";
  for (const auto& [norm, rho] : table_norms(hk::parse_rational(o.at("max-norm")))) {
    const hk::BetaClass beta = hk::BetaClass::make(2, norm, rho);
    const std::string key = "(" + str(norm) + ")";
    if (!eigen) {
      const Rational m = hk::multiplicity(beta);
      text << "norm=" << str(norm) << " multiplicity=" << str(m) << "\n";
      out.results["multiplicity" + key] = str(m);
    } else if (sgn(norm) == 0) {
      text << "norm=0 lambda1=- lambda2=-\n";
    } else {
      const hk::Eigenvalues e = hk::eigenvalues(beta);
      text << "norm=" << str(norm) << " lambda1=" << str(e.lambda1) << " lambda2=" << str(e.lambda2)
           << "\n";
      out.results["lambda1" + key] = str(e.lambda1);
      out.results["lambda2" + key] = str(e.lambda2);
    }
  }
  out.text = text.str();
  return out;
}

hk::QYSeries series_for(const std::string& form, int q, int n) {
  if (form == "theta")
    return hk::theta(q).series();
  if (form == "theta-squared")
    return hk::named_form(hk::FormName::PhiMinus2_1, q).series();
  if (form == "phi01")
    return hk::named_form(hk::FormName::Phi0_1, q).series();
  if (form == "phi")
    return hk::phi(q).series();
  if (form == "f")
    return hk::named_form(hk::FormName::F, q).series();
  if (form == "g")
    return hk::named_form(hk::FormName::G, q).series();
  if (form == "delta")
    return hk::delta(q).series();
  if (form == "e2")
    return hk::eisenstein(2, q).series();
  if (form == "e4")
    return hk::eisenstein(4, q).series();
  if (form == "e6")
    return hk::eisenstein(6, q).series();
  return hk::phi_pow_over_delta(n, q).series();
}

Outcome run_series(const std::map<std::string, std::string>& o) {
  Outcome out;
  const int n = o.count("n") ? std::stoi(o.at("n")) : 2;
  const hk::QYSeries s = series_for(o.at("form"), std::stoi(o.at("qprec")), n);
  std::ostringstream text;
  s.for_each_term([&](int d, int r2, const Rational& c) {
    const std::string value = hk::to_fraction_string(c);
    text << d << " " << r2 << " " << value << "\n";
    out.results[std::to_string(d) + " " + std::to_string(r2)] = value;
  });
  out.text = text.str();
  return out;
}

Outcome run_fano() {
  Outcome out;
  std::ostringstream text;
  bool all = true;
  auto report = [&](const std::string& name, const Rational& value, const Rational& expected) {
    const bool pass = value == expected;
    all = all && pass;
    text << (pass ? "PASS " : "FAIL ") << name << " = " << str(value);
    if (!pass)
      text << " (expected " << str(expected) << ")";
    text << "\n";
    out.results[name] = str(value);
    out.results[name + ".pass"] = pass;
  };

  const hk::Lemma31Numbers l = hk::lemma31_numbers();
  report("lemma31.H^2", l.h_squared, 315);
  report("lemma31.Hh", l.h_times_h, 315);
  report("lemma31.h^2", l.h2, 315);
  report("lemma31.(H-h)^2", l.h_squared + l.h2 - 2 * l.h_times_h, 0);

  try {
    const hk::PBClass s = hk::sprime_class();
    report("sprime.h^2.H^2", s.coefficient(2).coefficient(2, 0), 5);
    report("sprime.h^2.c", s.coefficient(2).coefficient(0, 1), -5);
    report("sprime.h.H^3", s.coefficient(1).coefficient(3, 0), hk::make_rational(-35, 6));
    report("sprime.1.H^4", s.coefficient(0).coefficient(4, 0), hk::make_rational(10, 3));
    text << "PASS sprime = " << s.to_string() << "\n";
    out.results["sprime.pass"] = true;
  } catch (const hk::ReferenceMismatch& e) {
    all = false;
    text << "FAIL sprime: " << e.what() << "\n";
    out.results["sprime.pass"] = false;
  }

  const hk::EigenvalueChain chain = hk::eigenvalue_chain();
  report("pushforward", chain.pushforward, 15);
  report("n70875", chain.n70875, 70875);
  report("n42525", chain.n42525, 42525);
  report("n945", chain.n945, 945);

  for (const auto& check : hk::consistency_web().checks)
    report("web." + check.name, check.lhs, check.rhs);

  out.results["all_pass"] = all;
  out.exit_code = all ? kExitOk : kExitFailure;
  out.text = text.str();
  return out;
}

Outcome run_sweep(const std::map<std::string, std::string>& o) {
  Outcome out;
  const hk::SweepReport r = hk::n_leq_7_sweep(std::stoi(o.at("max-d")));
  std::ostringstream text;
  text << "n=2..7 max_d=" << r.max_d << " cutoff=" << str(r.norm_cutoff)
       << " checked=" << r.coefficients_checked << " zeros=" << r.zeros.size() << "\n";
  out.results["coefficients_checked"] = std::to_string(r.coefficients_checked);
  out.results["zeros"] = std::to_string(r.zeros.size());
  for (const auto& z : r.zeros) {
    text << "zero n=" << z.n << " d=" << z.d << " r=" << z.r << " norm=" << str(z.norm)
         << " witness=" << (z.witness_found ? "found" : "none") << "\n";
    const std::string key = "zero(n=" + std::to_string(z.n) + ",d=" + std::to_string(z.d) +
                            ",r=" + std::to_string(z.r) + ")";
    out.results[key + ".norm"] = str(z.norm);
    out.results[key + ".witness_found"] = z.witness_found;
  }
  const auto& e = r.n8_case;
  text << "n8 d=" << e.d << " r=" << e.r << " norm=" << str(e.norm)
       << " coefficient=" << str(e.coefficient)
       << " witness=" << (e.witness_found ? "found" : "none") << "\n";
  text << "note: " << r.note << "\n";
  out.results["n8.norm"] = str(e.norm);
  out.results["n8.coefficient"] = str(e.coefficient);
  out.results["n8.witness_found"] = e.witness_found;
  out.text = text.str();
  return out;
}

} // namespace

int run(const Invocation& inv, std::ostream& out, std::ostream& err) {
  if (!inv.help.empty()) {
    out << inv.help;
    return kExitOk;
  }
  Outcome result;
  try {
    if (inv.subcommand == "uniruled")
      result = run_uniruled(inv.options);
    else if (inv.subcommand == "coeff")
      result = run_coeff(inv.options);
    else if (inv.subcommand == "table")
      result = run_table(inv.options);
    else if (inv.subcommand == "series")
      result = run_series(inv.options);
    else if (inv.subcommand == "fano verify")
      result = run_fano();
    else if (inv.subcommand == "sweep")
      result = run_sweep(inv.options);
    else
      throw UsageError("unknown subcommand '" + inv.subcommand + "'");
  } catch (const hk::Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }

  if (inv.output_mode == OutputMode::Json) {
    Json doc;
    doc["subcommand"] = inv.subcommand;
    doc["inputs"] = Json(inv.options);
    doc["results"] = result.results;
    out << doc.dump(2) << "\n";
  } else {
    out << result.text;
  }
  return result.exit_code;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Invocation inv;
  try {
    inv = parse(args);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    return run(inv, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
}

} // namespace hkcli
