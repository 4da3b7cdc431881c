// stringex command-line front end. See README.md for the command reference.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stringex/error.hpp"
#include "stringex/io.hpp"
#include "stringex/moves.hpp"
#include "stringex/oracle.hpp"
#include "stringex/pprime.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace stringex;

namespace {

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Json, Dot, Ascii };

struct Options {
  Format format = Format::Json;
  std::string dot_kind = "auto";
  std::string seq;
  bool apply_order = false;
  int pos = 0;
  std::string kind;
  std::string cert_path;
  int max_depth = 12;
  bool allow_large = false;
  std::optional<std::uint64_t> seed;
  int count = 1000;
};

// One command's output: either JSON or preformatted text.
struct Output {
  std::optional<json> value;
  std::string text;
  int status = kOk;
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_text(path));
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput, path + ": " + e.what());
  }
}

bool is_matrix_json(const json& j) { return j.is_object() && j.contains("labels"); }

MutationSeq parse_seq(const std::string& text, bool apply_order) {
  std::vector<ClosedStringId> ids;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
    if (!token.empty()) ids.push_back(parse_string_id(token));
  }
  return apply_order ? MutationSeq::from_application_order(std::move(ids)) : MutationSeq{ids};
}

Output matrix_output(const ExchangeMatrix& m, const Options& opt,
                     const std::optional<ShuffleWord>& word) {
  Output out;
  switch (opt.format) {
    case Format::Json:
      out.value = io::matrix_to_json(m);
      break;
    case Format::Dot: {
      const bool usual = opt.dot_kind == "usual" || (opt.dot_kind == "auto" && is_skew_symmetric(m));
      if (usual) {
        out.text = to_dot(usual_quiver(m));
      } else {
        if (!word) throw UsageError("coloured DOT needs an instance, not a bare matrix");
        out.text = to_dot(coloured_quiver(m, word->cartan()), m);
      }
      break;
    }
    case Format::Ascii:
      if (!word) throw UsageError("ascii output needs an instance");
      out.text = render_ascii(StringDiagram(*word));
      break;
  }
  return out;
}

Output word_output(const ShuffleWord& w, json extra, const Options& opt) {
  Output out;
  if (opt.format == Format::Ascii) {
    out.text = render_ascii(StringDiagram(w));
  } else if (opt.format == Format::Json) {
    extra["word"] = io::word_to_json(w);
    out.value = std::move(extra);
  } else {
    throw UsageError("dot output is not available for this command");
  }
  return out;
}

void require_json(const Options& opt, const char* command) {
  if (opt.format != Format::Json)
    throw UsageError(std::string(command) + " only supports --format json");
}

Output run_command(const std::string& command, const std::string& path, const Options& opt) {
  const json input = read_json(path);

  if (command == "mutate") {
    if (opt.format == Format::Ascii) throw UsageError("mutate does not support --format ascii");
    const MutationSeq s = parse_seq(opt.seq, opt.apply_order);
    if (is_matrix_json(input)) return matrix_output(apply_seq(io::matrix_from_json(input), s), opt, {});
    const ShuffleWord w = io::word_from_json(input);
    return matrix_output(apply_seq(exchange_matrix(w), s), opt, w);
  }

  const ShuffleWord w = io::word_from_json(input);
  if (command == "build") return matrix_output(exchange_matrix(w), opt, w);
  if (command == "render") {
    Output out;
    out.text = render_ascii(StringDiagram(w));
    return out;
  }
  if (command == "dot") {
    Options dot = opt;
    dot.format = Format::Dot;
    return matrix_output(exchange_matrix(w), dot, w);
  }
  if (command == "flip") {
    const FlipResult r = flip(w, opt.pos);
    json extra{{"effect", r.effect.mutated ? json(to_string(*r.effect.mutated)) : json(nullptr)}};
    return word_output(r.word, std::move(extra), opt);
  }
  if (command == "reduce") return word_output(reduce(w, parse_reduction_kind(opt.kind)), json::object(), opt);
  if (command == "reduce-to-bottom") {
    const BottomReduction r = reduce_to_bottom(w);
    if (opt.format == Format::Ascii) return word_output(r.bottom, json::object(), opt);
    require_json(opt, "reduce-to-bottom");
    Output out;
    out.value = json{{"bottom_word", io::word_to_json(r.bottom)},
                     {"mutations", io::seq_to_json(r.mutations)},
                     {"label_map", io::label_map_to_json(r.label_map)}};
    return out;
  }
  if (command == "certify") {
    require_json(opt, "certify");
    Output out;
    out.value = io::certificate_to_json(certify_pprime(w));
    return out;
  }
  if (command == "verify") {
    require_json(opt, "verify");
    const Certificate cert = io::certificate_from_json(read_json(opt.cert_path));
    const VerificationResult r = verify_certificate(cert, exchange_matrix(w));
    Output out;
    out.value = json{{"verified", r.ok},
                     {"failing_step", r.failing_step ? json(*r.failing_step) : json(nullptr)},
                     {"detail", r.detail}};
    out.status = r.ok ? kOk : kDomainError;
    return out;
  }
  if (command == "redden") {
    require_json(opt, "redden");
    ReddeningOptions ro;
    ro.max_depth = opt.max_depth;
    ro.allow_large = opt.allow_large;
    const ReddeningResult r = search_reddening(exchange_matrix(w), ro);
    Output out;
    out.value = json{{"sequence", r.sequence ? io::seq_to_json(*r.sequence) : json(nullptr)},
                     {"states_explored", r.states_explored}};
    return out;
  }
  throw UsageError("unknown command " + command);
}

// Random instance for `oracle check`: symmetrizer first, then entries
// a_ij = -t s_j / g, a_ji = -t s_i / g so the Cartan matrix is valid.
ShuffleWord random_instance(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> rank(1, 4);
  std::uniform_int_distribution<Integer> small(1, 3);
  std::bernoulli_distribution coin(0.5);
  std::bernoulli_distribution connect(0.7);
  const int n = rank(rng);
  std::vector<Integer> s(static_cast<std::size_t>(n));
  for (auto& v : s) v = small(rng);
  std::vector<std::vector<Integer>> a(static_cast<std::size_t>(n),
                                      std::vector<Integer>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    a[i][i] = 2;
    for (int j = i + 1; j < n; ++j) {
      if (!connect(rng)) continue;
      const Integer t = small(rng);
      const Integer g = std::gcd(s[i], s[j]);
      a[i][j] = -t * s[j] / g;
      a[j][i] = -t * s[i] / g;
    }
  }
  auto cartan = std::make_shared<const CartanMatrix>(validate_cartan(a));
  std::uniform_int_distribution<int> len(1, 12);
  std::uniform_int_distribution<int> letter(1, n);
  std::vector<Letter> letters;
  for (int t = len(rng); t > 0; --t)
    letters.push_back({letter(rng), coin(rng) ? Origin::Top : Origin::Bottom});
  return ShuffleWord::from_letters(std::move(letters), std::move(cartan));
}

Output run_oracle_check(const Options& opt) {
  require_json(opt, "oracle check");
  std::uint64_t seed = 20231018ULL;
  if (opt.seed) {
    seed = *opt.seed;
  } else if (const char* env = std::getenv("STRINGEX_SEED")) {
    seed = std::strtoull(env, nullptr, 10);
  }
  std::mt19937_64 rng(seed);
  json failures = json::array();
  for (int i = 0; i < opt.count; ++i) {
    const ShuffleWord w = random_instance(rng);
    const auto mismatches = oracle::compare_with_exchange(w);
    const bool ranges = oracle::check_entry_ranges(exchange_matrix(w), w.cartan());
    if (mismatches.empty() && ranges) continue;
    failures.push_back(json{{"instance", io::word_to_json(w)},
                            {"mismatches", mismatches.size()},
                            {"ranges_ok", ranges}});
  }
  Output out;
  out.value = json{{"seed", seed}, {"checked", opt.count}, {"failures", failures}};
  out.status = failures.empty() ? kOk : kDomainError;
  return out;
}

json error_json(const Error& e) {
  return json{{"error", std::string(to_string(e.code()))}, {"detail", e.detail()}};
}

void emit(const Output& out) {
  if (out.value)
    std::cout << out.value->dump(2) << '\n';
  else
    std::cout << out.text;
}

int run_single(const std::string& command, const std::string& path, const Options& opt) {
  try {
    const Output out = run_command(command, path, opt);
    emit(out);
    return out.status;
  } catch (const Error& e) {
    std::cout << error_json(e).dump(2) << '\n';
    return kDomainError;
  }
}

// Batch mode: every *.json file in the directory, in sorted filename order.
int run_batch(const std::string& command, const std::string& dir, const Options& opt) {
  if (!fs::is_directory(dir)) throw UsageError(dir + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  int status = kOk;
  json results = json::array();
  for (const auto& file : files) {
    json record{{"file", file.filename().string()}};
    try {
      const Output out = run_command(command, file.string(), opt);
      if (out.value) {
        record["result"] = *out.value;
      } else {
        std::cout << "# " << file.filename().string() << '\n' << out.text;
      }
      status = std::max(status, out.status);
    } catch (const Error& e) {
      record["result"] = error_json(e);
      status = kDomainError;
      if (opt.format != Format::Json)
        std::cout << "# " << file.filename().string() << '\n' << error_json(e).dump() << '\n';
    }
    results.push_back(std::move(record));
  }
  if (opt.format == Format::Json) std::cout << results.dump(2) << '\n';
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stringex: exchange matrices of string diagrams, mutation and P' certificates"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  std::string format = "json";
  std::string dir;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "dot", "ascii"}));
  app.add_option("--dir", dir, "Batch mode: run on every *.json file in this directory");

  std::string input;
  const auto with_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "Instance file (JSON), or - for stdin");
    return sub;
  };

  with_input(app.add_subcommand("build", "Exchange matrix of an instance"));
  with_input(app.add_subcommand("render", "ASCII string diagram"));
  auto* dot = with_input(app.add_subcommand("dot", "Quiver in DOT form"));
  dot->add_option("--kind", opt.dot_kind, "Quiver kind")
      ->check(CLI::IsMember({"usual", "coloured", "auto"}));
  auto* mutate_cmd = with_input(app.add_subcommand("mutate", "Mutate an instance's matrix or a matrix file"));
  mutate_cmd->add_option("--seq", opt.seq, "Directions, e.g. \"1:2,1:3\" (leftmost applied last)")
      ->required();
  mutate_cmd->add_flag("--apply-order", opt.apply_order, "Read --seq in application order");
  auto* flip_cmd = with_input(app.add_subcommand("flip", "Flip the diagonal between positions pos and pos+1"));
  flip_cmd->add_option("--pos", opt.pos, "1-based position")->required();
  auto* reduce_cmd = with_input(app.add_subcommand("reduce", "Apply a boundary reduction"));
  reduce_cmd->add_option("--kind", opt.kind, "Reduction")
      ->required()
      ->check(CLI::IsMember({"Ld", "Lu", "Rd", "Ru"}));
  with_input(app.add_subcommand("reduce-to-bottom", "Reduce to the all-Bottom word with mutations"));
  with_input(app.add_subcommand("certify", "Emit a P' certificate"));
  auto* verify_cmd = with_input(app.add_subcommand("verify", "Replay a certificate against an instance"));
  verify_cmd->add_option("--cert", opt.cert_path, "Certificate file")->required();
  auto* redden_cmd = with_input(app.add_subcommand("redden", "Breadth-first reddening search"));
  redden_cmd->add_option("--max-depth", opt.max_depth, "Depth budget")->check(CLI::NonNegativeNumber);
  redden_cmd->add_flag("--allow-large", opt.allow_large, "Lift the 6-vertex guard");
  auto* oracle_cmd = app.add_subcommand("oracle", "Oracle cross-checks");
  oracle_cmd->require_subcommand(1);
  auto* check_cmd = oracle_cmd->add_subcommand("check", "Compare exchange matrices with the oracle");
  std::uint64_t seed = 0;
  auto* seed_opt = check_cmd->add_option("--seed", seed, "RNG seed (default: $STRINGEX_SEED)");
  check_cmd->add_option("--count", opt.count, "Number of random instances")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  opt.format = format == "dot" ? Format::Dot : format == "ascii" ? Format::Ascii : Format::Json;
  if (seed_opt->count() > 0) opt.seed = seed;

  try {
    if (oracle_cmd->parsed()) {
      const Output out = run_oracle_check(opt);
      emit(out);
      return out.status;
    }
    const std::string command = app.get_subcommands().front()->get_name();
    if (!dir.empty()) {
      if (!input.empty()) throw UsageError("give either an input file or --dir, not both");
      return run_batch(command, dir, opt);
    }
    if (input.empty()) throw UsageError("missing input file");
    return run_single(command, input, opt);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    std::cout << error_json(e).dump(2) << '\n';
    return kDomainError;
  }
}
