#include "weyl/cli.hpp"

#include <cstdlib>
#include <optional>
#include <ostream>
#include <variant>

#include <CLI11.hpp>

#include "weyl/io.hpp"
#include "weyl/selftest.hpp"

namespace weyl {

namespace {

// Raised for outcomes that are well-formed but fail a check (exit 1).
struct VerificationFailure {
  std::string message;
  Json payload;
};

struct Options {
  std::string config;
  std::optional<std::string> mode;
  bool json = false;
  std::optional<std::uint64_t> seed;

  std::string expr;
  std::string expr2;
  std::string aut;
  std::string a;
  std::string b;
  std::string src;
  std::string dst;
  int bound = 2;
  std::optional<std::uint64_t> cap;
  std::optional<int> trials;
  std::string suite;
  std::string format = "json";
};

std::uint64_t parse_seed(const std::string& text, const char* what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || text.front() == '-')
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be a nonnegative integer");
  return v;
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  SessionConfig session() const {
    if (o_.config.empty()) throw Error(ErrorCode::InvalidArgument, "--config is required for expression commands");
    SessionConfig cfg = load_config(o_.config);
    if (o_.mode) cfg.mode = parse_mode(*o_.mode);
    if (auto s = env_or_flag_seed()) cfg.seed = *s;
    return cfg;
  }

  std::uint64_t seed() const {
    if (auto s = env_or_flag_seed()) return *s;
    if (!o_.config.empty()) return load_config(o_.config).seed;
    return 1;
  }

  void emit(const Json& j) const { out_ << j.dump(2) << "\n"; }

  void emit_element(const Element& e) const {
    if (o_.json)
      emit(element_json(e));
    else
      out_ << print_element(e) << "\n";
  }

  void eval() const {
    SessionConfig cfg = session();
    emit_element(parse_and_eval(o_.expr, cfg));
  }

  void bracket_cmd() const {
    SessionConfig cfg = session();
    emit_element(bracket(parse_and_eval(o_.expr, cfg), parse_and_eval(o_.expr2, cfg)));
  }

  void export_cmd() const {
    SessionConfig cfg = session();
    emit(element_json(parse_and_eval(o_.expr, cfg)));
  }

  using AnyAut = std::variant<LoadedNormalForm, FunctionalAut>;

  AnyAut load_aut(const std::string& path) const {
    Json j = read_json_file(path);
    if (j.is_object() && j.contains("images")) {
      FunctionalAut phi = functional_from_json(j);
      if (o_.mode) phi.mode = parse_mode(*o_.mode);
      return phi;
    }
    LoadedNormalForm nf = normal_form_from_json(j);
    if (o_.mode) nf.mode = parse_mode(*o_.mode);
    return nf;
  }

  // Normal form of a file, decomposing functional input.
  LoadedNormalForm load_normal_form(const std::string& path) const {
    AnyAut any = load_aut(path);
    if (auto* nf = std::get_if<LoadedNormalForm>(&any)) return *nf;
    const FunctionalAut& phi = std::get<FunctionalAut>(any);
    return {decompose_or_fail(phi), phi.mode};
  }

  NormalFormAut decompose_or_fail(const FunctionalAut& phi) const {
    try {
      return decompose_automorphism(phi);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NotAnAutomorphism) throw VerificationFailure{e.what(), nullptr};
      throw;
    }
  }

  void aut_apply() const {
    SessionConfig cfg = session();
    AnyAut any = load_aut(o_.aut);
    Element w = parse_and_eval(o_.expr, cfg);
    if (auto* nf = std::get_if<LoadedNormalForm>(&any)) {
      if (!(*nf->aut.sig == *cfg.signature))
        throw Error(ErrorCode::SignatureMismatch, "automorphism and config describe different algebras");
      emit_element(apply_normal_form(NormalFormAut{cfg.signature, nf->aut.tau, nf->aut.u, nf->aut.v, nf->aut.eps}, w));
      return;
    }
    const FunctionalAut& phi = std::get<FunctionalAut>(any);
    if (!(*phi.signature() == *cfg.signature))
      throw Error(ErrorCode::SignatureMismatch, "automorphism and config describe different algebras");
    Element rebased = terms_from_json(phi.signature(), terms_json(w));
    emit_element(apply_functional(phi, rebased));
  }

  void aut_compose() const {
    LoadedNormalForm a = load_normal_form(o_.a), b = load_normal_form(o_.b);
    if (!(*a.aut.sig == *b.aut.sig))
      throw Error(ErrorCode::SignatureMismatch, "the two automorphisms act on different algebras");
    b.aut.sig = a.aut.sig;
    b.aut.u.u = terms_from_json(a.aut.sig, terms_json(b.aut.u.u));
    Mode mode = o_.mode ? parse_mode(*o_.mode) : a.mode;
    if (mode == Mode::Assoc && (a.aut.eps == 1 || b.aut.eps == 1))
      throw VerificationFailure{"the sigma1 factor is not an associative automorphism", nullptr};
    NormalFormAut ab = NormalFormAut::identity(a.aut.sig);
    if (a.aut.eps == 0 && b.aut.eps == 0) {
      ab = compose_normal_forms(a.aut, b.aut);
    } else {
      try {
        ab = compose_via_functional(a.aut, b.aut, mode);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::NotAnAutomorphism) throw VerificationFailure{e.what(), nullptr};
        throw;
      }
    }
    emit(normal_form_json(ab, mode));
  }

  void aut_decompose() const {
    AnyAut any = load_aut(o_.aut);
    if (auto* nf = std::get_if<LoadedNormalForm>(&any)) {
      emit(normal_form_json(decompose_or_fail(to_functional(nf->aut, nf->mode)), nf->mode));
      return;
    }
    const FunctionalAut& phi = std::get<FunctionalAut>(any);
    emit(normal_form_json(decompose_or_fail(phi), phi.mode));
  }

  void aut_expand() const {
    LoadedNormalForm nf = load_normal_form(o_.aut);
    emit(functional_json(to_functional(nf.aut, nf.mode)));
  }

  void aut_verify() const {
    AnyAut any = load_aut(o_.aut);
    const int trials = o_.trials.value_or(100);
    VerifyReport r;
    if (auto* nf = std::get_if<LoadedNormalForm>(&any))
      r = verify_automorphism(nf->aut, nf->mode, trials, seed());
    else
      r = verify_automorphism(std::get<FunctionalAut>(any), trials, seed());
    if (!r.passed) throw VerificationFailure{"verification failed", verify_report_json(r)};
    emit(verify_report_json(r));
  }

  void iso() const {
    SignaturePtr src = load_config(o_.src).signature, dst = load_config(o_.dst).signature;
    IsoSearchResult r =
        iso_search_bounded(src, dst, o_.bound, o_.cap.value_or(2'000'000), o_.trials.value_or(20), seed());
    if (r.kind == IsoSearchResult::Kind::Unknown)
      throw VerificationFailure{"no isomorphism within the search bound", iso_result_json(r)};
    emit(iso_result_json(r));
  }

  void classify() const {
    SessionConfig cfg = session();
    emit(ad_behavior_json(*cfg.signature, classify_ad_behavior(parse_and_eval(o_.expr, cfg), cfg.bounds.probe_steps)));
  }

  void witness() const {
    SessionConfig cfg = session();
    auto w = faithfulness_witness(parse_and_eval(o_.expr, cfg));
    if (!w) throw VerificationFailure{"no witness inside the search box", nullptr};
    emit(witness_json(*w));
  }

  bool selftest() const {
    std::uint64_t s = seed();
    std::vector<std::string> names;
    if (o_.suite.empty())
      names = suite_names();
    else
      names = {o_.suite};
    bool ok = true;
    Json all = Json::array();
    for (const auto& n : names) {
      SuiteResult r = run_suite(n, s);
      ok = ok && r.passed;
      if (o_.json)
        all.push_back({{"suite", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"failure", r.failure}});
      else
        out_ << format_suite(r) << "\n";
    }
    if (o_.json) emit(all);
    return ok;
  }

 private:
  std::optional<std::uint64_t> env_or_flag_seed() const {
    if (o_.seed) return o_.seed;
    if (const char* env = std::getenv("WEYL_SEED"); env && *env) return parse_seed(env, "WEYL_SEED");
    return std::nullopt;
  }

  const Options& o_;
  std::ostream& out_;
};

int report_error(const std::string& message, const Json& payload, int code, bool json, std::ostream& out,
                 std::ostream& err) {
  err << "weyl: " << message << "\n";
  if (json) {
    Json j;
    j["error"] = message;
    j["exit_code"] = code;
    if (!payload.is_null()) j["report"] = payload;
    out << j.dump(2) << "\n";
  } else if (!payload.is_null()) {
    out << payload.dump(2) << "\n";
  }
  return code;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact arithmetic in the Weyl-type algebras W(l1, l2, Gamma)", "weyl"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--config", o.config, "Signature config file (JSON)");
  app.add_option("--mode", o.mode, "Verification semantics: lie or assoc")->check(CLI::IsMember({"lie", "assoc"}));
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--seed", o.seed, "Random seed (falls back to WEYL_SEED)");

  auto* eval = app.add_subcommand("eval", "Evaluate an expression to canonical form");
  eval->add_option("expr", o.expr)->required();
  auto* br = app.add_subcommand("bracket", "Commutator of two expressions");
  br->add_option("lhs", o.expr)->required();
  br->add_option("rhs", o.expr2)->required();
  auto* ex = app.add_subcommand("export", "Element as JSON");
  ex->add_option("--format", o.format)->check(CLI::IsMember({"json"}));
  ex->add_option("expr", o.expr)->required();

  auto* aut = app.add_subcommand("aut", "Automorphism operations");
  aut->require_subcommand(1);
  auto* apply = aut->add_subcommand("apply", "Apply an automorphism to an expression");
  apply->add_option("--aut", o.aut)->required();
  apply->add_option("expr", o.expr)->required();
  auto* compose = aut->add_subcommand("compose", "Normal form of a o b (b acts first)");
  compose->add_option("--a", o.a)->required();
  compose->add_option("--b", o.b)->required();
  auto* decompose = aut->add_subcommand("decompose", "Normal form of a generator-image table");
  decompose->add_option("--aut", o.aut)->required();
  auto* expand = aut->add_subcommand("expand", "Generator-image table of a normal form");
  expand->add_option("--aut", o.aut)->required();
  auto* verify = aut->add_subcommand("verify", "Check the homomorphism property on random products");
  verify->add_option("--aut", o.aut)->required();
  verify->add_option("--trials", o.trials);

  auto* iso = app.add_subcommand("iso", "Search for an isomorphism between two algebras");
  iso->add_option("--src", o.src)->required();
  iso->add_option("--dst", o.dst)->required();
  iso->add_option("--bound", o.bound)->check(CLI::Range(0, 6));
  iso->add_option("--cap", o.cap);
  iso->add_option("--trials", o.trials);

  auto* classify = app.add_subcommand("classify", "Local finiteness class of ad(expr) with a growth probe");
  classify->add_option("expr", o.expr)->required();
  auto* witness = app.add_subcommand("witness", "Lattice point on which an operator in F[D] acts nontrivially");
  witness->add_option("expr", o.expr)->required();

  auto* selftest = app.add_subcommand("selftest", "Run the property suites");
  selftest->add_option("--suite", o.suite)->check(CLI::IsMember(suite_names()));
  selftest->add_option("--seed", o.seed);

  std::vector<std::string> owned = {"weyl"};
  owned.insert(owned.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : owned) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  Runner r(o, out);
  try {
    if (*eval) r.eval();
    else if (*br) r.bracket_cmd();
    else if (*ex) r.export_cmd();
    else if (*apply) r.aut_apply();
    else if (*compose) r.aut_compose();
    else if (*decompose) r.aut_decompose();
    else if (*expand) r.aut_expand();
    else if (*verify) r.aut_verify();
    else if (*iso) r.iso();
    else if (*classify) r.classify();
    else if (*witness) r.witness();
    else if (*selftest) return r.selftest() ? 0 : 1;
    return 0;
  } catch (const VerificationFailure& f) {
    return report_error(f.message, f.payload, 1, o.json, out, err);
  } catch (const Error& e) {
    int code = e.code() == ErrorCode::HomomorphismCounterexample ? 1 : 2;
    return report_error(e.what(), nullptr, code, o.json, out, err);
  } catch (const Json::exception& e) {
    return report_error(std::string("malformed JSON: ") + e.what(), nullptr, 2, o.json, out, err);
  }
}

}  // namespace weyl
