// shiftlab: exact degree, class degree and fiber computations for one-block
// factor codes on shifts of finite type.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "shiftlab/cli.hpp"
#include "shiftlab/triple_io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Factor codes on shifts of finite type: degrees, class degrees, fibers"};
  app.set_version_flag("--version", shiftlab::kVersion);
  app.require_subcommand(1);

  shiftlab::Flags flags;
  bool bounded = false;

  for (const auto& name : shiftlab::commands()) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("inputs", flags.inputs, "triple file(s); a manifest for verify-examples");
    sub->add_option("--max-len", flags.max_len, "bounded search length")->capture_default_str();
    sub->add_option("--period", flags.period, "periodic word bound")->capture_default_str();
    sub->add_flag("--exact", flags.exact, "exact class degree via the transition monoid (default)");
    sub->add_flag("--bounded", bounded, "class degree over words up to --max-len");
    sub->add_option("--cap", flags.cap, "transition monoid element cap");
    sub->add_option("--out", flags.out, "write the report here instead of stdout");
    sub->add_option("--word", flags.word, "word over A(Y)");
    sub->add_option("--coordinate", flags.coordinate, "coordinate inside --word");
    sub->add_option("--set", flags.set, "comma-separated X symbols");
    sub->add_option("--symbol", flags.symbol, "symbol of A(Y)");
    sub->add_option("--bridge", flags.bridge, "bridge word v for u = w v w");
    sub->add_option("--keep", flags.keep, "comma-separated X symbols of the subshift");
    sub->add_option("--vbar", flags.vbar, "X word forbidden in the subshift");
    sub->add_option("--bound", flags.bound, "override of the sub-diamond length bound");
  }

  CLI11_PARSE(app, argc, argv);
  if (bounded) flags.exact = false;
  const std::string command = app.get_subcommands().front()->get_name();

  auto report = shiftlab::run(command, flags);
  auto text = shiftlab::dump_canonical(report.doc);
  if (flags.out) {
    // write to a sibling file, then rename into place
    std::filesystem::path target(*flags.out);
    auto tmp = target;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary);
      if (!out) {
        std::cerr << "cannot write " << tmp << "\n";
        return 1;
      }
      out << text;
    }
    std::filesystem::rename(tmp, target);
  } else {
    std::cout << text;
  }
  if (report.exit_code != 0 && report.doc.contains("status") && report.doc["status"].contains("message"))
    std::cerr << report.doc["status"]["message"].get<std::string>() << "\n";
  return report.exit_code;
}
