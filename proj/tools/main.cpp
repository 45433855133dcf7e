// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: identity-audit runs, exact table generation,
// zeta evaluation, and alternating power sums.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "genocchi/audit.hpp"

namespace {

using namespace genocchi;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "text") return OutputFormat::Text;
  throw CLI::ValidationError("--format", "expected json, csv or text");
}

void write_output(const std::string& payload, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream os(out_file, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open output file " + out_file);
  os << payload;
}

Complex parse_complex(const std::string& text, mpfr_prec_t prec) {
  auto parts = split(text, ',');
  if (parts.empty() || parts.size() > 2)
    throw CLI::ValidationError("--s", "expected RE or RE,IM");
  BigFloat re = parse_param_value(parts[0], prec);
  BigFloat im = parts.size() == 2 ? parse_param_value(parts[1], prec)
                                  : BigFloat(0.0, prec);
  return Complex(re, im);
}

int run_audit(const AuditConfig& config, const std::string& out_file) {
  auto reports = run_suite(config);
  write_output(serialize_suite(reports, config.output_format), out_file);
  return suite_exit_code(reports);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numeric toolkit for parameterized Genocchi-type "
               "numbers, polynomials and their interpolating zeta functions"};
  app.require_subcommand(1);

  // audit
  auto* audit = app.add_subcommand("audit", "run the full identity-audit suite");
  int max_n = 12;
  int max_order = 3;
  std::string odd_y = "1,3,5";
  std::string params_arg = "1,e,e;2,3,5;0.5,2,2";
  long precision_bits = 128;
  std::string format_name = "text";
  std::string out_file;
  audit->add_option("--max-n", max_n, "sweep upper index (default 12)");
  audit->add_option("--max-order", max_order, "max higher order for convolutions");
  audit->add_option("--odd-y", odd_y, "comma-separated odd multipliers");
  audit->add_option("--params", params_arg,
                    "parameter triples a,b,c separated by ';' ('e' and 'pi' allowed)");
  audit->add_option("--precision", precision_bits, "mantissa bits (default 128)");
  audit->add_option("--format", format_name, "json | csv | text");
  audit->add_option("--out", out_file, "write the report to a file");

  // table
  auto* table = app.add_subcommand("table", "print exact value tables");
  std::string table_kind;
  std::string table_range = "0..8";
  std::string table_format = "text";
  table->add_option("kind", table_kind,
                    "genocchi-classical | g-number | g-poly | zeta")
      ->required();
  table->add_option("range", table_range, "N or LO..HI (ignored for zeta)");
  table->add_option("--format", table_format, "json | csv | text");

  // zeta (also reachable as `table zeta`)
  auto* zeta_cmd = app.add_subcommand("zeta", "evaluate Z(s,x;a,b,c)");
  std::string s_arg = "2";
  std::string x_arg = "1";
  std::string a_arg = "1";
  std::string b_arg = "e";
  std::string c_arg = "e";
  long zeta_bits = 128;
  for (auto* cmd : {zeta_cmd, table}) {
    cmd->add_option("--s", s_arg, "exponent, RE or RE,IM");
    cmd->add_option("--x", x_arg, "argument x");
    cmd->add_option("--a", a_arg, "parameter a");
    cmd->add_option("--b", b_arg, "parameter b");
    cmd->add_option("--c", c_arg, "parameter c");
    cmd->add_option("--precision", zeta_bits, "mantissa bits (default 128)");
  }

  // altsum
  auto* altsum = app.add_subcommand("altsum", "alternating power sum routes");
  int alt_n = 0;
  int alt_m = 0;
  altsum->add_option("--n", alt_n, "exponent n >= 1")->required();
  altsum->add_option("--m", alt_m, "range m >= 1")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (audit->parsed()) {
      AuditConfig config;
      config.max_n = max_n;
      config.max_order = max_order;
      config.odd_y_list.clear();
      for (const auto& tok : split(odd_y, ','))
        config.odd_y_list.push_back(std::stoi(tok));
      config.param_triples.clear();
      for (const auto& triple : split(params_arg, ';')) {
        auto parts = split(triple, ',');
        if (parts.size() != 3)
          throw std::invalid_argument("audit: --params expects a,b,c triples");
        config.param_triples.push_back({parts[0], parts[1], parts[2]});
      }
      config.precision = Precision(precision_bits, 1e-20);
      config.output_format = parse_format(format_name);
      config.validate();
      return run_audit(config, out_file);
    }

    if (zeta_cmd->parsed() || (table->parsed() && table_kind == "zeta")) {
      Precision prec(zeta_bits);
      mpfr_prec_t wp = prec.working_bits();
      Complex s = parse_complex(s_arg, wp);
      BigFloat x = parse_param_value(x_arg, wp);
      ParamTriple params(parse_param_value(a_arg, wp), parse_param_value(b_arg, wp),
                         parse_param_value(c_arg, wp));
      ZetaResult r = zeta_G_ex(s, x, params, prec);
      int digits = static_cast<int>(static_cast<double>(zeta_bits) * 0.30103) - 2;
      std::cout << r.value.to_string(digits) << "\n";
      return 0;
    }

    if (table->parsed()) {
      int lo = 0, hi = 0;
      auto dots = table_range.find("..");
      if (dots == std::string::npos) {
        lo = hi = std::stoi(table_range);
      } else {
        lo = std::stoi(table_range.substr(0, dots));
        hi = std::stoi(table_range.substr(dots + 2));
      }
      std::cout << emit_table(table_kind, lo, hi, parse_format(table_format));
      return 0;
    }

    if (altsum->parsed()) {
      AltSumWitness w = alt_sum_witness(alt_n, alt_m);
      IdentityReport euler = euler_variant_check(alt_n, alt_m);
      std::cout << "direct        = " << w.direct << "\n"
                << "formula       = " << w.via_formula << "\n"
                << "euler-variant = " << status_name(euler.status) << "\n";
      return (w.direct == w.via_formula &&
              euler.status == IdentityStatus::Verified)
                 ? 0
                 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
