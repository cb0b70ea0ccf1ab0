#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "amalgam/errors.hpp"
#include "amalgam/witness.hpp"
#include "presentation.hpp"

namespace amalgam::cli {
namespace {

using nlohmann::ordered_json;

// Budget defaults, overridable through the environment and then by flags.
struct Defaults {
  int lambda_max = 3;
  std::uint64_t hom_bound = 50'000'000;
  std::size_t syllable_bound = kDefaultSyllableBound;
  std::size_t order_bound = 24;
};

template <typename T>
void read_env(const char* name, T& target) {
  const char* value = std::getenv(name);
  if (value == nullptr || *value == '\0') return;
  const std::string_view s(value);
  T parsed{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), parsed);
  if (ec != std::errc() || ptr != s.data() + s.size() || parsed <= 0)
    throw ParseError(std::string(name) + " must be a positive integer, got '" + value + "'");
  target = parsed;
}

Defaults env_defaults() {
  Defaults d;
  read_env("AMALGAM_LAMBDA_MAX", d.lambda_max);
  read_env("AMALGAM_HOM_BOUND", d.hom_bound);
  read_env("AMALGAM_SYLLABLE_BOUND", d.syllable_bound);
  read_env("AMALGAM_ORDER_BOUND", d.order_bound);
  return d;
}

struct Options {
  std::string presentation;
  std::string catalog;
  bool no_default_catalog = false;
  bool json = false;
  int rank = 0;
  std::vector<std::string> args;
  std::vector<std::string> samples;
  int lambda = 1;
  int gen = 1;
  std::optional<int> lambda_max;
  std::optional<std::uint64_t> hom_bound;
  std::optional<std::size_t> syllable_bound;
  std::optional<std::size_t> order_bound;
  std::uint64_t seed = 1;
  std::string element;
};

std::string generator_name(int i) { return std::string(1, static_cast<char>('a' + i - 1)); }

int inferred_rank(const std::vector<std::string>& words) {
  int rank = 1;
  for (const auto& w : words)
    for (char c : w)
      if (std::isalpha(static_cast<unsigned char>(c)))
        rank = std::max(rank, std::tolower(static_cast<unsigned char>(c)) - 'a' + 1);
  return rank;
}

// Rank for commands that act on bare words: --rank, else the presentation,
// else the largest letter used.
Alphabet word_alphabet(const Options& o, const std::vector<std::string>& words) {
  if (o.rank > 0) return Alphabet(o.rank);
  if (!o.presentation.empty()) return load_presentation(o.presentation).alphabet();
  return Alphabet(inferred_rank(words));
}

Presentation require_presentation(const Options& o) {
  if (o.presentation.empty()) throw ParseError("this command needs --presentation <file>");
  return load_presentation(o.presentation);
}

DoubleGroup load_double(const Options& o, const Defaults& d) {
  DoubleGroup group = require_presentation(o).double_group();
  group.set_syllable_bound(o.syllable_bound.value_or(d.syllable_bound));
  return group;
}

SearchBudget make_budget(const Options& o, const Defaults& d) {
  SearchBudget b;
  b.lambda_max = o.lambda_max.value_or(d.lambda_max);
  if (b.lambda_max < 1) throw DomainError("--lambda-max must be at least 1");
  if (b.lambda_max > b.derived_cap)
    throw BudgetError("--lambda-max " + std::to_string(b.lambda_max) + " exceeds the derived-level cap " + std::to_string(b.derived_cap));
  b.hom_node_limit = o.hom_bound.value_or(d.hom_bound);
  if (o.no_default_catalog) b.catalog.clear();
  if (!o.catalog.empty())
    for (auto& g : load_catalog(o.catalog)) b.catalog.push_back(std::move(g));
  return b;
}

ordered_json syllables_json(const DoubleElement& x) {
  ordered_json out = ordered_json::array();
  for (const Syllable& s : x.syllables()) out.push_back({{"side", side_name(s.side)}, {"word", to_string(s.word)}});
  return out;
}

std::vector<int> one_based(const Perm& p) {
  std::vector<int> out;
  for (int v : p.images()) out.push_back(v + 1);
  return out;
}

ordered_json hom_json(std::span<const Perm> images, int rank) {
  ordered_json out = ordered_json::object();
  for (int i = 0; i < 2 * rank; ++i) {
    const std::string name = i < rank ? generator_name(i + 1) : generator_name(i - rank + 1) + "bar";
    out[name] = one_based(images[static_cast<std::size_t>(i)]);
  }
  return out;
}

ordered_json budget_json(const SearchBudget& b, std::size_t syllable_bound) {
  ordered_json names = ordered_json::array();
  for (const auto& g : b.catalog) names.push_back(g.name());
  return {{"lambda_max", b.lambda_max},
          {"derived_cap", b.derived_cap},
          {"hom_node_limit", b.hom_node_limit},
          {"syllable_bound", syllable_bound},
          {"catalog", names}};
}

ordered_json proof_json(const SyllableProof& p) {
  ordered_json j = {{"position", p.position},
                    {"side", side_name(p.side)},
                    {"word", to_string(p.word)},
                    {"verdict", verdict_name(p.verdict)},
                    {"method", method_name(p.method)},
                    {"evidence", p.evidence}};
  if (p.verdict == SyllableVerdict::Separated) j["lambda"] = p.lambda;
  if (!p.image_group.empty()) {
    j["image_group"] = p.image_group;
    ordered_json hom = ordered_json::object();
    for (std::size_t i = 0; i < p.image_hom.size(); ++i) hom[generator_name(static_cast<int>(i) + 1)] = one_based(p.image_hom[i]);
    j["image_hom"] = hom;
  }
  return j;
}

std::string_view target_name(SolvableQuotientWitness::Target t) {
  switch (t) {
    case SolvableQuotientWitness::Target::DerivedQuotient: return "derived_quotient";
    case SolvableQuotientWitness::Target::Abelianization: return "abelianization";
    case SolvableQuotientWitness::Target::FiniteGroup: return "finite_group";
  }
  return "derived_quotient";
}

ordered_json witness_json(const Witness& w, const SearchBudget& budget, std::size_t syllable_bound, int rank) {
  ordered_json j = {{"type", witness_type(w)}};
  if (const auto* q = std::get_if<SolvableQuotientWitness>(&w)) {
    j["route"] = q->route;
    j["target"] = target_name(q->target);
    j["lambda"] = q->lambda;
    j["group"] = q->group;
    j["derived_length"] = q->derived_length;
    if (!q->hom.empty()) j["hom"] = hom_json(q->hom, rank);
    if (q->functional) j["functional"] = {{"coefficients", q->functional->coefficients}, {"modulus", q->functional->modulus}};
    j["image"] = q->image;
  } else if (const auto* c = std::get_if<GLambdaCertificate>(&w)) {
    j["route"] = 4;
    j["lambda"] = c->lambda;
    j["group"] = "G_" + std::to_string(c->lambda);
    ordered_json proofs = ordered_json::array();
    for (const auto& p : c->syllable_proofs) proofs.push_back(proof_json(p));
    j["syllable_proofs"] = proofs;
    j["compatibility_checks"] = c->compatibility_checks;
  }
  j["budget"] = budget_json(budget, syllable_bound);
  if (const auto* e = std::get_if<ExhaustedReport>(&w)) {
    j["budget"]["hom_nodes"] = e->hom_nodes;
    j["budget"]["homs_checked"] = e->homs_checked;
    j["budget"]["hom_search_truncated"] = e->hom_search_truncated;
    j["notes"] = e->notes;
  }
  return j;
}

void print_witness_text(std::ostream& out, const Witness& w) {
  out << "type: " << witness_type(w) << '\n';
  if (const auto* q = std::get_if<SolvableQuotientWitness>(&w)) {
    out << "route: " << q->route << " (" << target_name(q->target) << ")\n";
    out << "lambda: " << q->lambda << '\n';
    out << "group: " << q->group << '\n';
    out << "derived length: " << q->derived_length << '\n';
    if (!q->hom.empty()) {
      const int rank = static_cast<int>(q->hom.size() / 2);
      for (int i = 0; i < 2 * rank; ++i)
        out << "  " << (i < rank ? generator_name(i + 1) : generator_name(i - rank + 1) + "bar") << " -> "
            << to_cycle_string(q->hom[static_cast<std::size_t>(i)]) << '\n';
    }
    out << "image: " << q->image << '\n';
  } else if (const auto* c = std::get_if<GLambdaCertificate>(&w)) {
    out << "lambda: " << c->lambda << '\n';
    for (const auto& p : c->syllable_proofs)
      out << "  syllable " << p.position << " (" << side_name(p.side) << ": " << to_string(p.word) << ") "
          << verdict_name(p.verdict) << " at lambda " << p.lambda << " by " << method_name(p.method) << ": " << p.evidence
          << '\n';
    out << "compatibility checks: " << c->compatibility_checks << '\n';
  } else if (const auto* e = std::get_if<ExhaustedReport>(&w)) {
    out << "lambda max: " << e->lambda_max << ", hom nodes: " << e->hom_nodes << " of " << e->hom_node_limit
        << ", homs checked: " << e->homs_checked << (e->hom_search_truncated ? " (truncated)" : "") << '\n';
    for (const auto& n : e->notes) out << "  " << n << '\n';
  }
}

// Each command writes its result and returns the exit code.
class Commands {
 public:
  Commands(const Options& o, std::ostream& out) : o_(o), out_(out), defaults_(env_defaults()) {}

  int emit(ordered_json j, const std::string& text) {
    if (o_.json)
      out_ << j.dump(2) << '\n';
    else
      out_ << text << '\n';
    return kExitOk;
  }

  int reduce() {
    const Alphabet a = word_alphabet(o_, {arg(0)});
    const Word w = parse_word(arg(0), a);
    return emit({{"command", "reduce"}, {"input", arg(0)}, {"word", to_string(w)}, {"length", w.length()}}, to_string(w));
  }

  int member() {
    const Presentation p = require_presentation(o_);
    const Word w = parse_word(arg(0), p.alphabet());
    const bool m = p.subgroup_graph().member(w);
    return emit({{"command", "member"}, {"word", to_string(w)}, {"member", m}}, m ? "true" : "false");
  }

  int index() {
    const auto idx = require_presentation(o_).subgroup_graph().index();
    ordered_json j = {{"command", "index"}, {"finite", idx.has_value()}};
    j["index"] = idx ? ordered_json(*idx) : ordered_json(nullptr);
    return emit(j, idx ? std::to_string(*idx) : "infinite");
  }

  int basis() {
    const SubgroupGraph g = require_presentation(o_).subgroup_graph();
    ordered_json words = ordered_json::array();
    std::string text;
    for (const Word& w : g.free_basis()) {
      words.push_back(to_string(w));
      text += (text.empty() ? "" : "\n") + to_string(w);
    }
    if (g.free_basis().empty()) text = "(empty basis)";
    return emit({{"command", "basis"}, {"size", g.free_basis().size()}, {"basis", words}}, text);
  }

  int in_derived_cmd() {
    const Alphabet a = word_alphabet(o_, {arg(0)});
    const Word w = parse_word(arg(0), a);
    if (o_.lambda < 0) throw DomainError("--lambda must be non-negative");
    const bool in = in_derived(w, DerivedLevel{o_.lambda});
    return emit({{"command", "in-derived"}, {"word", to_string(w)}, {"lambda", o_.lambda}, {"in_derived", in}},
                in ? "true" : "false");
  }

  int fox() {
    const Alphabet a = word_alphabet(o_, {arg(0)});
    const Word w = parse_word(arg(0), a);
    if (!a.contains(o_.gen) || o_.gen < 1) throw DomainError("--gen must lie in 1.." + std::to_string(a.rank()));
    const GroupRingElement e = fox_derivative(w, o_.gen);
    ordered_json terms = ordered_json::array();
    for (const auto& [word, c] : e.terms()) terms.push_back({{"word", to_string(word)}, {"coefficient", c}});
    return emit({{"command", "fox"}, {"word", to_string(w)}, {"generator", o_.gen}, {"derivative", to_string(e)}, {"terms", terms}},
                to_string(e));
  }

  int normalize() {
    const DoubleGroup g = load_double(o_, defaults_);
    const DoubleElement x = parse_element(arg(0), g);
    return emit({{"command", "normalize"}, {"input", arg(0)}, {"normal_form", to_string(x)}, {"syllables", syllables_json(x)}},
                to_string(x));
  }

  int deq() {
    const DoubleGroup g = load_double(o_, defaults_);
    const DoubleElement x = parse_element(arg(0), g);
    const DoubleElement y = parse_element(arg(1), g);
    const bool eq = g.equal(x, y);
    return emit({{"command", "deq"}, {"left", to_string(x)}, {"right", to_string(y)}, {"equal", eq}}, eq ? "true" : "false");
  }

  int retract() {
    const DoubleGroup g = load_double(o_, defaults_);
    const DoubleElement x = parse_element(arg(0), g);
    const Word r = g.retract(x);
    return emit({{"command", "retract"}, {"element", to_string(x)}, {"retract", to_string(r)}}, to_string(r));
  }

  int kernel_gen() {
    const DoubleGroup g = load_double(o_, defaults_);
    const Word a = parse_word(arg(0), g.alphabet());
    const DoubleElement k = g.kernel_gen(a).element();
    return emit({{"command", "kernel-gen"}, {"word", to_string(a)}, {"kernel_generator", to_string(k)}, {"syllables", syllables_json(k)}},
                to_string(k));
  }

  int ck_check() {
    const DoubleGroup g = load_double(o_, defaults_);
    std::vector<Word> samples;
    for (const auto& s : o_.samples) samples.push_back(parse_word(s, g.alphabet()));
    if (samples.empty())
      for (int i = 1; i <= g.alphabet().rank(); ++i) samples.push_back(Word::generator(g.alphabet(), i));
    const CommutationReport r = g.check_ck_commutation(samples);
    ordered_json failures = ordered_json::array();
    std::ostringstream text;
    text << (r.all_pass() ? "pass" : "fail") << ": " << r.checks - r.failures.size() << " of " << r.checks
         << " commutators trivial; C " << (r.subgroup_normal ? "normal" : "not normal");
    for (const auto& f : r.failures) {
      failures.push_back({{"subgroup_generator", to_string(f.subgroup_generator)},
                          {"sample", to_string(f.sample)},
                          {"commutator", to_string(f.commutator)}});
      text << "\n  [" << to_string(f.subgroup_generator) << ", kernel_gen(" << to_string(f.sample)
           << ")] = " << to_string(f.commutator);
    }
    return emit({{"command", "ck-check"},
                 {"pass", r.all_pass()},
                 {"subgroup_normal", r.subgroup_normal},
                 {"checks", r.checks},
                 {"failures", failures}},
                text.str());
  }

  int abelianize() {
    const DoubleGroup g = load_double(o_, defaults_);
    const AbelianizedDouble ab = abelianization(g);
    ordered_json j = {{"command", "abelianize"},
                      {"group", ab.describe()},
                      {"free_rank", ab.free_rank()},
                      {"torsion", ab.torsion()},
                      {"relations", ab.relations}};
    std::string text = ab.describe();
    if (!o_.element.empty()) {
      const DoubleElement x = parse_element(o_.element, g);
      const AbelianImage img = ab_image(ab, g, x);
      j["element"] = to_string(x);
      j["image"] = {{"zero", img.zero},
                    {"exponents", img.exponents},
                    {"torsion_coordinates", img.torsion_coordinates},
                    {"free_coordinates", img.free_coordinates}};
      text += "\nimage of " + to_string(x) + ": " + (img.zero ? "zero" : "nonzero");
    }
    return emit(j, text);
  }

  int witness() {
    const DoubleGroup g = load_double(o_, defaults_);
    const SearchBudget budget = make_budget(o_, defaults_);
    const DoubleElement x = parse_element(arg(0), g);
    const Witness w = witness_search(g, x, budget);
    ordered_json j = {{"command", "witness"}, {"element", to_string(x)}};
    j.update(witness_json(w, budget, g.syllable_bound(), g.alphabet().rank()));
    std::ostringstream text;
    text << "element: " << to_string(x) << '\n';
    print_witness_text(text, w);
    std::string s = text.str();
    s.pop_back();
    emit(j, s);
    return std::holds_alternative<ExhaustedReport>(w) ? kExitBudget : kExitOk;
  }

  int negative_demo_cmd() {
    NegativeDemoOptions options;
    if (!o_.presentation.empty()) {
      const Presentation p = load_presentation(o_.presentation);
      if (!p.quotient) throw DomainError("negative-demo needs a quotient block (perm.*) in the presentation");
      options.quotient = *p.quotient;
    }
    options.order_bound = o_.order_bound.value_or(defaults_.order_bound);
    options.budget = make_budget(o_, defaults_);
    options.seed = o_.seed;
    const NegativeDemoReport r = negative_demo(options);
    const int rank = static_cast<int>(options.quotient.images.size());

    ordered_json samples = ordered_json::array();
    for (const auto& w : r.kernel_samples) samples.push_back(to_string(w));
    ordered_json j = {{"command", "negative-demo"},
                      {"quotient_order", r.quotient_order},
                      {"quotient_perfect", r.quotient_perfect},
                      {"index", r.index},
                      {"basis_size", r.basis_size},
                      {"d", r.d},
                      {"d_nontrivial", r.d_nontrivial},
                      {"d_in_kernel", r.d_in_kernel},
                      {"ab_image_zero", r.ab_image_zero},
                      {"ck_commutation", {{"pass", r.ck_commutation.all_pass()}, {"checks", r.ck_commutation.checks}}},
                      {"kernel_samples", samples},
                      {"order_bound", options.order_bound},
                      {"seed", options.seed},
                      {"catalog", r.catalog},
                      {"homs_checked", r.homs_checked},
                      {"hom_nodes", r.hom_nodes},
                      {"hom_search_truncated", r.hom_search_truncated},
                      {"d_killed_by_all", r.d_killed_by_all},
                      {"mechanism_holds", r.mechanism_holds},
                      {"mechanism_failures", r.mechanism_failures},
                      {"witness", witness_type(r.witness)}};
    SearchBudget used = options.budget;
    used.catalog = restrict_catalog(options.budget.catalog, options.order_bound);
    j["witness_report"] = witness_json(r.witness, used, kDefaultSyllableBound, rank);

    std::ostringstream text;
    text << "quotient order: " << r.quotient_order << (r.quotient_perfect ? " (perfect)" : "") << '\n'
         << "index of C: " << r.index << ", free basis size: " << r.basis_size << '\n'
         << "d = " << r.d << '\n'
         << "d nontrivial: " << std::boolalpha << r.d_nontrivial << ", d in K: " << r.d_in_kernel
         << ", ab image zero: " << r.ab_image_zero << '\n'
         << "[C, K] = 1 on samples: " << r.ck_commutation.all_pass() << " (" << r.ck_commutation.checks << " checks)\n"
         << "catalog (order <= " << options.order_bound << "): " << r.catalog.size() << " groups\n"
         << "homs checked: " << r.homs_checked << " (" << r.hom_nodes << " nodes"
         << (r.hom_search_truncated ? ", truncated" : "") << ")\n"
         << "d killed by every hom: " << r.d_killed_by_all << '\n'
         << "C mu = image and K mu central for every hom: " << r.mechanism_holds << '\n'
         << "witness: " << witness_type(r.witness);
    return emit(j, text.str());
  }

 private:
  const std::string& arg(std::size_t i) const {
    if (i >= o_.args.size()) throw ParseError("missing argument " + std::to_string(i + 1));
    return o_.args[i];
  }

  const Options& o_;
  std::ostream& out_;
  Defaults defaults_;
};

int fail(std::ostream& out, std::ostream& err, const Options& o, const std::string& command, std::string_view kind,
         const std::string& message, int code) {
  err << "amalgam " << command << ": " << message << '\n';
  if (o.json) out << ordered_json({{"command", command}, {"error", kind}, {"message", message}}).dump(2) << '\n';
  return code;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations in doubles of free groups and residual-solvability witnesses", "amalgam"};
  app.require_subcommand(1);
  Options o;

  auto add = [&](const std::string& name, const std::string& description) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_flag("--json", o.json, "Emit JSON");
    return sub;
  };
  auto with_presentation = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("-p,--presentation", o.presentation, "Presentation file");
    if (required) opt->required();
    return sub;
  };
  auto with_budget = [&](CLI::App* sub) {
    sub->add_option("--lambda-max", o.lambda_max, "Largest derived level to try");
    sub->add_option("--catalog", o.catalog, "Extra catalog file of finite solvable groups");
    sub->add_flag("--no-default-catalog", o.no_default_catalog, "Use only groups from --catalog");
    sub->add_option("--hom-bound", o.hom_bound, "Node limit for homomorphism search");
  };

  auto* reduce = with_presentation(add("reduce", "Freely reduce a word"), false);
  reduce->add_option("word", o.args, "Word")->required();
  reduce->add_option("--rank", o.rank, "Rank of the free group");

  auto* member = with_presentation(add("member", "Membership in C"), true);
  member->add_option("word", o.args, "Word")->required();
  with_presentation(add("index", "Index of C"), true);
  with_presentation(add("basis", "Nielsen-Schreier free basis of C"), true);

  auto* derived = with_presentation(add("in-derived", "Membership in the lambda-th derived subgroup"), false);
  derived->add_option("word", o.args, "Word")->required();
  derived->add_option("--lambda", o.lambda, "Derived level")->required();
  derived->add_option("--rank", o.rank, "Rank of the free group");

  auto* fox = with_presentation(add("fox", "Fox derivative"), false);
  fox->add_option("word", o.args, "Word")->required();
  fox->add_option("--gen", o.gen, "Generator index (1-based)")->required();
  fox->add_option("--rank", o.rank, "Rank of the free group");

  for (const char* name : {"normalize", "retract"}) {
    auto* sub = with_presentation(add(name, std::string(name) == "normalize" ? "Normal form of a double element" : "Retraction D -> A"), true);
    sub->add_option("element", o.args, "Element, e.g. 'A: ab | Abar: Ba'")->required();
    sub->add_option("--syllable-bound", o.syllable_bound, "Syllable stack limit");
  }
  auto* deq = with_presentation(add("deq", "Equality in the double"), true);
  deq->add_option("elements", o.args, "Two elements")->required()->expected(2);
  deq->add_option("--syllable-bound", o.syllable_bound, "Syllable stack limit");

  auto* kgen = with_presentation(add("kernel-gen", "Kernel generator a * bar(a)^-1"), true);
  kgen->add_option("word", o.args, "Word a")->required();

  auto* ck = with_presentation(add("ck-check", "Check [C, K] = 1 on generators"), true);
  ck->add_option("--sample", o.samples, "Sample words a for kernel_gen(a); defaults to the generators");

  auto* ab = with_presentation(add("abelianize", "Abelianization of the double"), true);
  ab->add_option("--element", o.element, "Also report the image of this element");

  auto* witness = with_presentation(add("witness", "Search for a residual-solvability witness"), true);
  witness->add_option("element", o.args, "Element")->required();
  witness->add_option("--syllable-bound", o.syllable_bound, "Syllable stack limit");
  with_budget(witness);

  auto* demo = with_presentation(add("negative-demo", "Perfect-quotient double report"), false);
  demo->add_option("--order-bound", o.order_bound, "Largest catalog group order");
  demo->add_option("--seed", o.seed, "Seed for sampled kernel generators");
  with_budget(demo);

  std::string command = "amalgam";
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitError;
  }

  command = app.get_subcommands().front()->get_name();
  try {
    Commands c(o, out);
    if (command == "reduce") return c.reduce();
    if (command == "member") return c.member();
    if (command == "index") return c.index();
    if (command == "basis") return c.basis();
    if (command == "in-derived") return c.in_derived_cmd();
    if (command == "fox") return c.fox();
    if (command == "normalize") return c.normalize();
    if (command == "deq") return c.deq();
    if (command == "retract") return c.retract();
    if (command == "kernel-gen") return c.kernel_gen();
    if (command == "ck-check") return c.ck_check();
    if (command == "abelianize") return c.abelianize();
    if (command == "witness") return c.witness();
    if (command == "negative-demo") return c.negative_demo_cmd();
    return fail(out, err, o, command, "parse", "unknown command", kExitError);
  } catch (const BudgetError& e) {
    return fail(out, err, o, command, "budget", e.what(), kExitBudget);
  } catch (const ParseError& e) {
    return fail(out, err, o, command, "parse", e.what(), kExitError);
  } catch (const Error& e) {
    return fail(out, err, o, command, "domain", e.what(), kExitError);
  }
}

}  // namespace amalgam::cli
