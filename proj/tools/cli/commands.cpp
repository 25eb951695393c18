#include "commands.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include <CLI11.hpp>

namespace charp::cli {
namespace {

const char* status_name(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::Error: return "error";
    case Status::Unresolved: return "unresolved";
  }
  return "error";
}

std::string scalar_text(const Json& v) {
  if (v.is_null()) return "none";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void project(std::ostringstream& out, const std::string& key, const Json& v) {
  if (v.is_object()) {
    for (const auto& [k, item] : v.items()) project(out, key.empty() ? k : key + "." + k, item);
    return;
  }
  if (!v.is_array()) {
    out << key << ": " << scalar_text(v) << '\n';
    return;
  }
  if (v.empty()) {
    out << key << ": []\n";
    return;
  }
  bool strings = std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_string(); });
  bool scalars = std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); });
  if (strings) {
    out << key << ":\n";
    for (const auto& x : v) out << "  " << x.get<std::string>() << '\n';
  } else if (scalars) {
    out << key << ": [";
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar_text(v[i]);
    out << "]\n";
  } else {
    for (std::size_t i = 0; i < v.size(); ++i) project(out, key + "[" + std::to_string(i) + "]", v[i]);
  }
}

Json strings(const std::vector<Polynomial>& polys) {
  Json out = Json::array();
  for (const auto& f : polys) out.push_back(f.to_string());
  return out;
}

Json canonical(const Ideal& I) { return strings(I.groebner_basis()); }

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

// Resolves named and inline arguments against the session and a context ring.
class Resolver {
 public:
  Resolver(const Session& s, const Options& o) : s_(s) {
    if (o.ring) {
      auto it = s.rings.find(*o.ring);
      ring_ = it != s.rings.end() ? it->second : parse_ring_spec(*o.ring);
    } else if (o.ideal && s.ideals.contains(*o.ideal)) {
      ring_ = s.ideals.at(*o.ideal).ring();
    } else {
      ring_ = s.current_ring;
    }
  }

  const RingPtr& ring() const {
    if (!ring_) throw Error("no ring available: pass --ring or a session declaring one");
    return ring_;
  }

  Ideal ideal(const std::string& flag, const std::optional<std::string>& v) const {
    if (!v) throw Error("missing " + flag);
    return ideal(*v);
  }

  Ideal ideal(const std::string& v) const {
    if (auto it = s_.ideals.find(v); it != s_.ideals.end()) {
      require_same_ring(it->second.ring(), ring());
      return it->second;
    }
    return Ideal(ring(), parse_poly_list(unwrap(v), ring()));
  }

  Polynomial poly(const std::string& flag, const std::optional<std::string>& v) const {
    if (!v) throw Error("missing " + flag);
    if (auto it = s_.polys.find(*v); it != s_.polys.end()) {
      require_same_ring(it->second.ring(), ring());
      return it->second;
    }
    return parse_poly(*v, ring());
  }

  std::vector<Ideal> primes(const std::vector<std::string>& values) const {
    std::vector<Ideal> out;
    for (const auto& v : values) {
      if (auto it = s_.minprimes.find(v); it != s_.minprimes.end()) {
        for (const auto& P : it->second) {
          require_same_ring(P.ring(), ring());
          out.push_back(P);
        }
      } else {
        out.push_back(ideal(v));
      }
    }
    return out;
  }

  QuotientRingCtx quotient(const Options& o, bool with_primes) const {
    Ideal a = o.ideal ? ideal(*o.ideal) : Ideal::zero(ring());
    if (with_primes && !o.min_primes.empty()) return QuotientRingCtx(a, primes(o.min_primes));
    return QuotientRingCtx(a);
  }

 private:
  // "(f, g)" -> "f, g" when the outer parentheses enclose the whole list.
  static std::string unwrap(const std::string& v) {
    auto first = v.find_first_not_of(" \t");
    auto last = v.find_last_not_of(" \t");
    if (first == std::string::npos || v[first] != '(' || v[last] != ')') return v;
    int depth = 0;
    for (std::size_t i = first; i <= last; ++i) {
      if (v[i] == '(') ++depth;
      if (v[i] == ')' && --depth == 0 && i != last) return v;
    }
    return v.substr(first + 1, last - first - 1);
  }

  const Session& s_;
  RingPtr ring_;
};

CommandResult boolean(CommandResult r, const char* key, bool value) {
  r.payload[key] = value;
  if (!value) r.exit_code = kExitNegative;
  return r;
}

CommandResult unresolved(CommandResult r) {
  r.status = Status::Unresolved;
  r.exit_code = kExitUnresolved;
  return r;
}

using Handler = std::function<CommandResult(CommandResult, const Resolver&, const Options&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"gb", [](CommandResult r, const Resolver& R, const Options& o) {
         r.payload["generators"] = canonical(R.ideal("--ideal", o.ideal));
         return r;
       }},
      {"nf", [](CommandResult r, const Resolver& R, const Options& o) {
         r.payload["normal_form"] = normal_form(R.poly("--poly", o.poly), R.ideal("--ideal", o.ideal)).to_string();
         return r;
       }},
      {"member", [](CommandResult r, const Resolver& R, const Options& o) {
         return boolean(std::move(r), "member", ideal_member(R.poly("--poly", o.poly), R.ideal("--ideal", o.ideal)));
       }},
      {"colon", [](CommandResult r, const Resolver& R, const Options& o) {
         r.payload["generators"] = canonical(ideal_colon(R.ideal("--ideal", o.ideal), R.ideal("--by", o.by)));
         return r;
       }},
      {"intersect", [](CommandResult r, const Resolver& R, const Options& o) {
         r.payload["generators"] = canonical(ideal_intersect(R.ideal("--ideal", o.ideal), R.ideal("--with", o.with)));
         return r;
       }},
      {"saturate", [](CommandResult r, const Resolver& R, const Options& o) {
         r.payload["generators"] = canonical(saturate(R.ideal("--ideal", o.ideal), R.poly("--by", o.by)));
         return r;
       }},
      {"eliminate", [](CommandResult r, const Resolver& R, const Options& o) {
         Ideal J = eliminate(R.ideal("--ideal", o.ideal), o.k);
         r.payload["ring"] = J.ring()->describe();
         r.payload["generators"] = canonical(J);
         return r;
       }},
      {"fpow", [](CommandResult r, const Resolver& R, const Options& o) {
         r.payload["generators"] = canonical(frobenius_power(R.ideal("--ideal", o.ideal), o.e));
         return r;
       }},
      {"froot", [](CommandResult r, const Resolver& R, const Options& o) {
         r.payload["generators"] = canonical(frobenius_root(R.ideal("--ideal", o.ideal), o.e));
         return r;
       }},
      {"omega", [](CommandResult r, const Resolver& R, const Options& o) {
         std::uint32_t p = o.p ? *o.p : R.ring()->characteristic();
         if (!is_prime(p)) throw PreconditionError("--p must be prime");
         r.payload["p"] = p;
         r.payload["n"] = o.n;
         r.payload["omega"] = omega(o.n, p);
         return r;
       }},
      {"adjoint", [](CommandResult r, const Resolver& R, const Options& o) {
         r.payload["generators"] = canonical(frobenius_adjoint(R.ideal("--ideal", o.ideal)));
         return r;
       }},
      {"fedder", [](CommandResult r, const Resolver& R, const Options& o) {
         return boolean(std::move(r), "fpure",
                        fedder_fpure(R.ideal("--ideal", o.ideal), R.ideal("--max-ideal", o.max_ideal)));
       }},
      {"select-u", [](CommandResult r, const Resolver& R, const Options& o) {
         auto sel = select_u_candidates(R.ideal("--ideal", o.ideal), R.ideal("--max-ideal", o.max_ideal));
         r.payload["candidates"] = strings(sel.candidates);
         return boolean(std::move(r), "fpure", sel.fpure);
       }},
      {"hsl", [](CommandResult r, const Resolver& R, const Options& o) {
         HSLReport rep = hsl_chain(HSLChainSpec(R.ideal("--ideal", o.ideal), R.poly("--u", o.u), o.max_e));
         Json chain = Json::array();
         for (const auto& t : rep.chain) chain.push_back(canonical(t));
         r.payload["chain"] = std::move(chain);
         r.payload["hsl"] = optional_json(rep.hsl);
         r.payload["stable"] = rep.stable;
         r.payload["persistence_checked"] = rep.persistence_checked;
         return rep.stable ? r : unresolved(std::move(r));
       }},
      {"hsl-bound", [](CommandResult r, const Resolver& R, const Options& o) {
         auto hsl = uniform_hsl_bound(R.ideal("--ideal", o.ideal), R.poly("--u", o.u), o.max_e);
         r.payload["hsl"] = optional_json(hsl);
         return hsl ? r : unresolved(std::move(r));
       }},
      {"test-ideal-bound", [](CommandResult r, const Resolver& R, const Options& o) {
         TestIdealBoundSpec spec(R.ideal("--ideal", o.ideal), R.poly("--u", o.u), R.poly("--d", o.d), o.h, o.max_e);
         TestIdealBound out = test_ideal_lower_bound(spec);
         r.payload["hsl"] = optional_json(spec.hsl());
         r.payload["generators"] = canonical(out.ideal);
         r.payload["stable"] = out.stable;
         r.payload["last_level"] = out.last_level;
         r.payload["strictly_contains_a"] = out.strictly_contains_a;
         return out.stable ? r : unresolved(std::move(r));
       }},
      {"tc-cert", [](CommandResult r, const Resolver& R, const Options& o) {
         QuotientRingCtx Q = R.quotient(o, false);
         auto rep = tc_certificate({R.poly("--r", o.r), R.ideal("--b", o.b), R.poly("--c", o.c), o.level}, Q);
         r.payload["levels"] = rep.levels;
         r.payload["first_failure"] = optional_json(rep.first_failure);
         return boolean(std::move(r), "all_pass", rep.all_pass);
       }},
      {"test-element", [](CommandResult r, const Resolver& R, const Options& o) {
         if (o.min_primes.empty()) throw InsufficientData("test-element needs --min-prime");
         QuotientRingCtx Q = R.quotient(o, true);
         std::vector<Ideal> family;
         std::vector<std::vector<Polynomial>> closure;
         for (const auto& t : o.targets) family.push_back(R.ideal(t));
         for (const auto& c : o.closures) closure.push_back(R.ideal(c).generators());
         auto rep = test_element_certificate(R.poly("--c", o.c), family, closure, o.level, Q);
         Json failures = Json::array();
         for (const auto& f : rep.failures) {
           failures.push_back({{"ideal", f.ideal_index}, {"element", f.element_index}, {"level", f.level}});
         }
         r.payload["failures"] = std::move(failures);
         return boolean(std::move(r), "all_pass", rep.all_pass);
       }},
      {"nilpotent", [](CommandResult r, const Resolver& R, const Options& o) {
         auto k = is_nilpotent(R.poly("--r", o.r), R.quotient(o, false), o.k_max);
         r.payload["nilpotent"] = k.has_value();
         r.payload["k"] = optional_json(k);
         return k ? r : unresolved(std::move(r));
       }},
      {"r0-cert", [](CommandResult r, const Resolver& R, const Options& o) {
         if (o.min_primes.empty()) throw InsufficientData("r0-cert needs --min-prime");
         std::vector<Polynomial> seps;
         for (const auto& s : o.separators) seps.push_back(R.poly("--separator", s));
         return boolean(std::move(r), "r0", r0_certificate(R.quotient(o, true), seps));
       }},
  };
  return table;
}

struct Spec {
  const char* name;
  const char* help;
  std::vector<const char*> required;
  std::vector<const char*> optional;
};

const std::vector<Spec>& specs() {
  static const std::vector<Spec> table = {
      {"gb", "reduced Groebner basis", {"--ideal"}, {}},
      {"nf", "normal form of a polynomial", {"--ideal", "--poly"}, {}},
      {"member", "ideal membership", {"--ideal", "--poly"}, {}},
      {"colon", "ideal quotient I : J", {"--ideal", "--by"}, {}},
      {"intersect", "ideal intersection", {"--ideal", "--with"}, {}},
      {"saturate", "saturation I : f^infinity", {"--ideal", "--by"}, {}},
      {"eliminate", "eliminate the first k variables", {"--ideal", "--k"}, {}},
      {"fpow", "Frobenius power I^[p^e]", {"--ideal", "--e"}, {}},
      {"froot", "Frobenius root I^[1/p^e]", {"--ideal", "--e"}, {}},
      {"omega", "omega_n = 1 + p + ... + p^(n-1)", {"--n"}, {"--p"}},
      {"adjoint", "(a^[p] : a)", {"--ideal"}, {}},
      {"fedder", "Fedder F-purity test", {"--ideal", "--max-ideal"}, {}},
      {"select-u", "candidates u in (a^[p] : a) outside q^[p]", {"--ideal", "--max-ideal"}, {}},
      {"hsl", "HSL chain t_n and its stabilization index", {"--ideal", "--u"}, {"--max-e"}},
      {"hsl-bound", "HSL index only", {"--ideal", "--u"}, {"--max-e"}},
      {"test-ideal-bound", "lower bound for the test ideal", {"--ideal", "--u", "--d", "--h"}, {"--max-e"}},
      {"tc-cert", "bounded tight-closure certificate", {"--r", "--b", "--c"}, {"--ideal", "--level"}},
      {"test-element", "test-element certificate over an ideal family",
       {"--ideal", "--c", "--min-prime", "--target", "--closure"}, {"--level"}},
      {"nilpotent", "nilpotency of r in S/a", {"--ideal", "--r"}, {"--k-max"}},
      {"r0-cert", "(R_0) certificate", {"--ideal", "--min-prime", "--separator"}, {}},
  };
  return table;
}

void add_option(CLI::App& sub, Options& o, const std::string& flag, bool required) {
  CLI::Option* opt = nullptr;
  static const std::map<std::string, std::optional<std::string> Options::*> text = {
      {"--ideal", &Options::ideal}, {"--poly", &Options::poly}, {"--u", &Options::u},
      {"--d", &Options::d},         {"--r", &Options::r},       {"--b", &Options::b},
      {"--c", &Options::c},         {"--by", &Options::by},     {"--with", &Options::with},
      {"--max-ideal", &Options::max_ideal}};
  static const std::map<std::string, unsigned Options::*> numbers = {
      {"--e", &Options::e},         {"--k", &Options::k},         {"--n", &Options::n},
      {"--h", &Options::h},         {"--max-e", &Options::max_e}, {"--level", &Options::level},
      {"--k-max", &Options::k_max}};
  static const std::map<std::string, std::vector<std::string> Options::*> lists = {
      {"--min-prime", &Options::min_primes}, {"--separator", &Options::separators},
      {"--target", &Options::targets},       {"--closure", &Options::closures}};
  if (auto t = text.find(flag); t != text.end()) {
    opt = sub.add_option(flag, o.*(t->second));
  } else if (auto n = numbers.find(flag); n != numbers.end()) {
    opt = sub.add_option(flag, o.*(n->second))->capture_default_str();
  } else if (auto l = lists.find(flag); l != lists.end()) {
    opt = sub.add_option(flag, o.*(l->second))->allow_extra_args(false)->expected(1)->multi_option_policy(
        CLI::MultiOptionPolicy::TakeAll);
  } else if (flag == "--p") {
    opt = sub.add_option(flag, o.p);
  }
  if (opt && required) opt->required();
}

void build(CLI::App& app, Options& o) {
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "JSON output");
  app.add_option("--session", o.session, "session file");
  app.add_option("--ring", o.ring, "ring name or inline 'F p [vars]'");
  for (const auto& s : specs()) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->set_help_flag("--help", "print subcommand help");
    sub->fallthrough();
    for (const char* f : s.required) add_option(*sub, o, f, true);
    for (const char* f : s.optional) add_option(*sub, o, f, false);
    sub->callback([&o, name = s.name] { o.command = name; });
  }
}

}  // namespace

Json CommandResult::to_json() const {
  Json out;
  out["command"] = command;
  out["status"] = status_name(status);
  if (status == Status::Error) {
    out["error"] = message;
  } else {
    out["payload"] = payload;
  }
  return out;
}

std::string CommandResult::to_text() const {
  std::ostringstream out;
  project(out, "", to_json());
  return out.str();
}

Options parse_arguments(const std::vector<std::string>& argv) {
  Options o;
  if (!argv.empty() && !argv.front().starts_with("-") &&
      std::none_of(specs().begin(), specs().end(), [&](const Spec& s) { return argv.front() == s.name; })) {
    throw Error("unknown subcommand '" + argv.front() + "'");
  }
  CLI::App app("charp");
  build(app, o);
  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    throw Error(e.what());
  }
  return o;
}

std::string usage() {
  Options o;
  CLI::App app("charp: characteristic-p commutative algebra");
  build(app, o);
  return app.help();
}

CommandResult execute(const Session& session, const Options& options) {
  CommandResult r;
  r.command = options.command;
  auto it = handlers().find(options.command);
  if (it == handlers().end()) throw Error("unknown subcommand '" + options.command + "'");
  Resolver resolver(session, options);
  return it->second(std::move(r), resolver, options);
}

CommandResult run_command(const Session& session, const std::vector<std::string>& argv) {
  CommandResult failed;
  failed.command = argv.empty() ? "" : argv.front();
  failed.status = Status::Error;
  failed.exit_code = kExitError;
  try {
    Options o = parse_arguments(argv);
    failed.command = o.command;
    return execute(session, o);
  } catch (const std::exception& e) {
    failed.message = e.what();
  }
  return failed;
}

}  // namespace charp::cli
