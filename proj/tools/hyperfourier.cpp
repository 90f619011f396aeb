// hyperfourier: convert grid files, run transforms, verify theorems, time paths.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or I/O error.

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyperfourier/errors.hpp"
#include "hyperfourier/fft.hpp"
#include "hyperfourier/gridio.hpp"
#include "hyperfourier/parallel.hpp"
#include "hyperfourier/qft2d.hpp"
#include "hyperfourier/spacetime.hpp"
#include "hyperfourier/timing.hpp"
#include "hyperfourier/verify.hpp"

namespace hf = hyperfourier;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Already formatted for the user.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string extension_kind(const std::string& path) {
  std::string ext = std::filesystem::path(path).extension().string();
  for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (ext == ".csv") return "csv";
  if (ext == ".ppm" || ext == ".pnm") return "image";
  if (ext == ".qf2d") return "qf2d";
  if (ext == ".st4d") return "st4d";
  return "";
}

hf::TransformPath parse_path(const std::string& s) {
  if (s == "auto") return hf::TransformPath::Auto;
  if (s == "direct") return hf::TransformPath::Direct;
  return hf::TransformPath::Fast;
}

void apply_thread_env() {
  const char* env = std::getenv("HYPERFOURIER_THREADS");
  if (env == nullptr || *env == '\0') return;
  char* end = nullptr;
  const long n = std::strtol(env, &end, 10);
  if (*end != '\0' || n < 0 || n > 4096) {
    throw UsageError(std::string("HYPERFOURIER_THREADS must be a non-negative integer, got '") + env + "'");
  }
  hf::set_worker_threads(static_cast<int>(n));
}

// --- convert ----------------------------------------------------------------

int run_convert(const std::string& in, std::string kind, const std::string& out) {
  if (kind.empty()) kind = extension_kind(in);
  if (kind.empty()) throw UsageError("cannot infer the input kind of '" + in + "'; pass --kind");
  const std::string target = extension_kind(out);
  if (target != "csv" && target != "qf2d" && target != "st4d") {
    throw UsageError("output '" + out + "' must end in .csv, .qf2d or .st4d");
  }

  if (kind == "st4d") {
    if (target != "st4d") throw UsageError("an ST4D grid converts only to .st4d");
    hf::write_st4d(out, hf::read_st4d(in));
    return kExitOk;
  }
  if (target == "st4d") throw UsageError("a 2D quaternion grid cannot be written as .st4d");

  const hf::QuaternionField2D f = [&] {
    try {
      return kind == "csv" ? hf::read_csv(in) : kind == "image" ? hf::read_ppm(in) : hf::read_qf2d(in);
    } catch (const hf::ParseError& e) {
      if (kind != "csv") throw;
      throw InputError("parse error: line " + std::to_string(e.location()) + ": " + e.what());
    }
  }();
  if (target == "csv") {
    hf::write_csv(out, f);
  } else {
    hf::write_qf2d(out, f);
  }
  return kExitOk;
}

// --- transform --------------------------------------------------------------

bool is_spacetime_transform(const std::string& t) { return t == "vtft" || t == "ivtft" || t == "sft" || t == "isft"; }

int run_transform(const std::string& transform, const std::string& in, const std::string& out,
                  hf::TransformPath path, const std::string& magnitude) {
  const hf::GridKind kind = hf::peek_grid_kind(in);
  const bool spacetime = is_spacetime_transform(transform);
  if (spacetime && kind != hf::GridKind::ST4D) throw UsageError(transform + " needs an ST4D input file");
  if (!spacetime && kind != hf::GridKind::QF2D) throw UsageError(transform + " needs a QF2D input file");

  if (spacetime) {
    if (!magnitude.empty()) throw UsageError("--magnitude is only available for 2D transforms");
    if (transform == "vtft") {
      hf::write_st4d(out, hf::vtft_forward(hf::read_st4d(in), path));
    } else if (transform == "sft") {
      hf::write_st4d(out, hf::sft_forward(hf::read_st4d(in), path));
    } else if (transform == "ivtft") {
      hf::write_st4d(out, hf::vtft_inverse(hf::read_st4d<hf::SpectrumTag>(in), path));
    } else {
      hf::write_st4d(out, hf::sft_inverse(hf::read_st4d<hf::SpectrumTag>(in), path));
    }
    return kExitOk;
  }

  if (transform == "qft" || transform == "qftr") {
    const hf::QuaternionField2D f = hf::read_qf2d(in);
    hf::QSpectrum2D F = transform == "qft" ? hf::qft_forward(f, path) : hf::qftr_forward(f, path);
    F = hf::QSpectrum2D(F.M(), F.N(), F.values(), f.dx(), f.dy());
    hf::write_qf2d(out, F);
    if (!magnitude.empty()) hf::write_magnitude_csv(magnitude, F);
  } else {
    const hf::QSpectrum2D F = hf::read_qf2d<hf::SpectrumTag>(in);
    hf::QuaternionField2D f = transform == "iqft" ? hf::qft_inverse(F, path) : hf::qftr_inverse(F, path);
    f = hf::QuaternionField2D(f.M(), f.N(), f.values(), F.dx(), F.dy());
    hf::write_qf2d(out, f);
    if (!magnitude.empty()) hf::write_magnitude_csv(magnitude, f);
  }
  return kExitOk;
}

// --- verify / bench ---------------------------------------------------------

int run_verify(const std::string& suite, std::uint64_t seed, bool times) {
  const hf::RunReport report = hf::run_verification(suite, seed);
  std::cout << hf::format_report(report, times);
  return report.passed() ? kExitOk : kExitFailed;
}

std::vector<std::size_t> parse_sizes(const std::string& list) {
  std::vector<std::size_t> sizes;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(item.c_str(), &end, 10);
    if (item.empty() || *end != '\0' || v == 0 || v > 4096) throw UsageError("bad size '" + item + "' in --sizes");
    if (!hf::fft::is_power_of_two(static_cast<std::size_t>(v))) throw UsageError("size " + item + " is not a power of two");
    sizes.push_back(static_cast<std::size_t>(v));
  }
  if (sizes.empty()) throw UsageError("--sizes is empty");
  return sizes;
}

int run_bench(const std::string& list, std::uint64_t seed) {
  std::vector<hf::SpeedRow> rows;
  bool matched = true;
  for (std::size_t n : parse_sizes(list)) {
    rows.push_back(hf::compare_qft_paths(n, seed));
    matched = matched && rows.back().matched;
  }
  std::cout << "forward QFT, " << hf::worker_threads() << " worker thread(s)\n" << hf::format_speed_table(rows);
  return matched ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quaternion, volume-time and spacetime Fourier transforms"};
  app.require_subcommand(1);

  std::string in, out, kind, path_name = "auto", suite = "all", sizes = "16,32,64", transform, magnitude;
  std::uint64_t seed = 42;
  bool no_times = false;

  CLI::App* convert = app.add_subcommand("convert", "Convert between CSV, PPM image, QF2D and ST4D files");
  convert->add_option("--in", in, "Input file")->required();
  convert->add_option("--kind", kind, "Input kind (default: from the extension)")
      ->check(CLI::IsMember({"csv", "image", "qf2d", "st4d"}));
  convert->add_option("--out", out, "Output file (.csv, .qf2d or .st4d)")->required();

  CLI::App* trans = app.add_subcommand("transform", "Apply a transform to a grid file");
  trans->add_option("transform", transform, "qft, iqft, qftr, iqftr, vtft, ivtft, sft or isft")
      ->required()
      ->check(CLI::IsMember({"qft", "iqft", "qftr", "iqftr", "vtft", "ivtft", "sft", "isft"}));
  trans->add_option("--in", in, "Input QF2D or ST4D file")->required();
  trans->add_option("--out", out, "Output file of the same shape")->required();
  trans->add_option("--path", path_name, "auto, direct or fast")->check(CLI::IsMember({"auto", "direct", "fast"}));
  trans->add_option("--magnitude", magnitude, "Also write x,y,magnitude CSV (2D only)");

  CLI::App* verify = app.add_subcommand("verify", "Run the theorem-verification suites");
  std::vector<std::string> suites = hf::verification_suites();
  suites.push_back("all");
  verify->add_option("--suite", suite, "Suite name or all")->check(CLI::IsMember(suites));
  verify->add_option("--seed", seed, "Random seed");
  verify->add_flag("--no-times", no_times, "Omit wall times so repeated runs print identical reports");

  CLI::App* bench = app.add_subcommand("bench", "Time direct vs. fast QFT paths");
  bench->add_option("--sizes", sizes, "Comma-separated power-of-two sizes");
  bench->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    apply_thread_env();
    if (convert->parsed()) return run_convert(in, kind, out);
    if (trans->parsed()) return run_transform(transform, in, out, parse_path(path_name), magnitude);
    if (verify->parsed()) return run_verify(suite, seed, !no_times);
    return run_bench(sizes, seed);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
  } catch (const InputError& e) {
    std::cerr << e.what() << "\n";
  } catch (const hf::ParseError& e) {
    std::cerr << "parse error: byte offset " << e.location() << ": " << e.what() << "\n";
  } catch (const hf::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
  } catch (const hf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}
