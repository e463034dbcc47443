#include "abundancy/bounds.hpp"
#include "abundancy/certificate.hpp"
#include "abundancy/congruence.hpp"
#include "abundancy/json.hpp"
#include "abundancy/search.hpp"
#include "abundancy/sigma.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <stdexcept>
#include <string>

namespace {

using namespace abundancy;

// distinguishes bad command-line input (exit 2) from domain failures
// raised by the library (exit 1)
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Natural parse_arg(const std::string& raw, const std::string& what) {
  try {
    return parse_natural(raw);
  } catch (const std::invalid_argument&) {
    throw UsageError(what + " must be a decimal natural number, got '" +
                     raw + "'");
  }
}

std::string shape_kind_name(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::OddSquare:
      return "odd-square";
    case ShapeKind::TwoPowerTimesSquare:
      return "two-power-times-square";
    case ShapeKind::Unconstrained:
      return "unconstrained";
  }
  return "unknown";
}

void print_json(const ordered_json& value) {
  std::cout << value.dump(2) << '\n';
}

int cmd_friends(const std::string& target_raw, const std::string& max_raw,
                unsigned jobs, const std::string& format) {
  Natural target = parse_arg(target_raw, "TARGET");
  Natural bound = parse_arg(max_raw, "--max");
  SearchReport report = search_partitioned(target, bound, jobs);
  if (format == "table") {
    std::cout << to_table(report);
  } else {
    print_json(to_json(report));
  }
  return 0;
}

int cmd_certify(const std::string& name, const std::string& format) {
  if (name != "friends-of-12") {
    throw UsageError("unknown certificate '" + name +
                     "'; available: friends-of-12");
  }
  CertificateReport report = run_certificate(builtin_friends_of_12_certificate());
  if (format == "table") {
    std::cout << to_table(report);
  } else {
    print_json(to_json(report));
  }
  return report.all_passed ? 0 : 1;
}

int cmd_window(const std::string& q1_raw, const std::string& format) {
  Natural q1 = parse_arg(q1_raw, "--q1");
  PrimeWindow window = two_prime_window(q1);
  if (format == "table") {
    std::cout << "lower   " << window.lower.str() << '\n';
    std::cout << "upper   " << window.upper.str() << '\n';
    std::cout << "primes  ";
    if (window.primes.empty()) {
      std::cout << "(none)";
    } else {
      for (std::size_t i = 0; i < window.primes.size(); ++i) {
        if (i > 0) {
          std::cout << ", ";
        }
        std::cout << window.primes[i].str();
      }
    }
    std::cout << '\n';
  } else {
    print_json(to_json(window));
  }
  return 0;
}

int cmd_classify(const std::string& n_raw, const std::string& format) {
  Natural n = parse_arg(n_raw, "N");
  SquareShape shape = classify_shape(n);
  if (format == "table") {
    std::cout << "kind          " << shape_kind_name(shape.kind) << '\n';
    std::cout << "two_exponent  " << shape.two_exponent << '\n';
    std::cout << "square_root   " << shape.square_root.str() << '\n';
  } else {
    print_json(ordered_json{
        {"n", n.str()},
        {"kind", shape_kind_name(shape.kind)},
        {"two_exponent", shape.two_exponent},
        {"square_root", shape.square_root.str()},
    });
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact arithmetic with the divisor-sum function and the abundancy "
      "index"};
  app.require_subcommand(1);

  std::string sigma_n;
  CLI::App* sigma_cmd =
      app.add_subcommand("sigma", "print sigma(N), the sum of divisors");
  sigma_cmd->add_option("N", sigma_n, "decimal natural number")->required();

  std::string index_n;
  CLI::App* index_cmd = app.add_subcommand(
      "index", "print the abundancy index sigma(N)/N in lowest terms");
  index_cmd->add_option("N", index_n, "decimal natural number")->required();

  std::string friends_target;
  std::string friends_max = "1000000";
  unsigned friends_jobs = 1;
  std::string friends_format = "json";
  CLI::App* friends_cmd = app.add_subcommand(
      "friends", "list numbers up to --max sharing TARGET's abundancy index");
  friends_cmd->add_option("TARGET", friends_target, "decimal natural number")
      ->required();
  friends_cmd->add_option("--max", friends_max, "largest number scanned")
      ->capture_default_str();
  friends_cmd->add_option("--jobs", friends_jobs, "parallel sieve partitions")
      ->check(CLI::Range(1u, 4096u))
      ->capture_default_str();
  friends_cmd->add_option("--format", friends_format, "output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();

  std::string certify_name;
  std::string certify_format = "json";
  CLI::App* certify_cmd = app.add_subcommand(
      "certify", "replay a named certificate and report every check");
  certify_cmd->add_option("NAME", certify_name, "certificate name")
      ->required();
  certify_cmd->add_option("--format", certify_format, "output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();

  std::string window_q1;
  std::string window_format = "json";
  CLI::App* window_cmd = app.add_subcommand(
      "window", "print the window for the second extra prime given q1");
  window_cmd->add_option("--q1", window_q1, "first extra prime, at least 29")
      ->required();
  window_cmd->add_option("--format", window_format, "output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();

  std::string classify_n;
  std::string classify_format = "json";
  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "decompose N as k^2 or 2^f k^2 when sigma(N) is odd");
  classify_cmd->add_option("N", classify_n, "decimal natural number")
      ->required();
  classify_cmd->add_option("--format", classify_format, "output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(sigma_cmd)) {
      std::cout << sigma(parse_arg(sigma_n, "N")).str() << '\n';
      return 0;
    }
    if (app.got_subcommand(index_cmd)) {
      std::cout << abundancy_index(parse_arg(index_n, "N")).str() << '\n';
      return 0;
    }
    if (app.got_subcommand(friends_cmd)) {
      return cmd_friends(friends_target, friends_max, friends_jobs,
                         friends_format);
    }
    if (app.got_subcommand(certify_cmd)) {
      return cmd_certify(certify_name, certify_format);
    }
    if (app.got_subcommand(window_cmd)) {
      return cmd_window(window_q1, window_format);
    }
    if (app.got_subcommand(classify_cmd)) {
      return cmd_classify(classify_n, classify_format);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
