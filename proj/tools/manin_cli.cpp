// manin: enumerate / construct / verify / report.
// Exit codes: 0 ok, 1 a valid input failed the Manin verifier, 2 usage or input errors.

#include <manin/manin.h>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Failure {
  int code;
  std::string message;
};

using CString = std::unique_ptr<char, decltype(&manin_string_free)>;
using Ctx = std::unique_ptr<manin_context, decltype(&manin_context_destroy)>;

void check(manin_status s) {
  if (s == MANIN_OK) return;
  throw Failure{2, std::string(manin_last_error())};
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{2, "cannot open '" + path + "'"};
  return {std::istreambuf_iterator<char>(in), {}};
}

// Inline JSON when it looks like an object, otherwise a file path.
std::string json_arg(const std::string& v) {
  const auto p = v.find_first_not_of(" \t\r\n");
  if (p != std::string::npos && v[p] == '{') return v;
  return read_input(v);
}

class Output {
public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw Failure{2, "cannot write '" + path + "'"};
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
  std::ofstream file_;
};

Ctx make_context(const std::optional<std::string>& type, const std::optional<std::string>& form) {
  manin_context* raw = nullptr;
  if (form) check(manin_context_create_real_form(form->c_str(), &raw));
  else check(manin_context_create_type(type->c_str(), &raw));
  return Ctx(raw, &manin_context_destroy);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Manin triples and Belavin-Drinfeld triples over exact arithmetic"};
  app.require_subcommand(1);

  std::vector<std::string> types;
  std::optional<std::string> real_form, type_one, ext_path, triple_arg;
  std::string out_path;
  int max_rank = 8, jobs = 1;
  std::string input = "-";

  auto* en = app.add_subcommand("enumerate", "all BD triples of a type or real form, one JSON line each");
  en->add_option("--type", types, "root system type, e.g. A3 (repeatable)");
  en->add_option("--real-form", real_form, "split:A2, realification:A1, su(p,q), so(p,q), EII");
  en->add_option("--max-rank", max_rank, "refuse root systems of larger rank")->check(CLI::Range(0, 64));
  en->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
  en->add_option("--out", out_path, "output file (default stdout)");

  auto* co = app.add_subcommand("construct", "W(phi) and the Manin report for one triple");
  co->add_option("--type", type_one, "root system type");
  co->add_option("--real-form", real_form, "real form");
  co->add_option("--triple", triple_arg, "triple JSON object or file")->required();
  co->add_option("--ext", ext_path, "Cartan extension JSON object or file (default: constructed)");
  co->add_option("--out", out_path, "output file (default stdout)");

  auto* ve = app.add_subcommand("verify", "re-check triples from JSON, a JSON array, or JSON lines");
  ve->add_option("input", input, "input file, - for stdin");
  ve->add_option("--out", out_path, "output file (default stdout)");

  auto* re = app.add_subcommand("report", "summary table of enumerate output");
  re->add_option("input", input, "input file, - for stdin");
  re->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    bool consistent = true;
    if (*en) {
      if (types.empty() == !real_form) throw Failure{2, "enumerate needs --type or --real-form (not both)"};
      std::vector<std::pair<std::optional<std::string>, std::optional<std::string>>> targets;
      if (real_form) targets.emplace_back(std::nullopt, real_form);
      for (const auto& t : types) targets.emplace_back(t, std::nullopt);
      std::vector<std::string> chunks;
      for (const auto& [t, f] : targets) {
        Ctx ctx = make_context(t, f);
        char* raw = nullptr;
        int ok = 1;
        check(manin_context_enumerate(ctx.get(), max_rank, jobs, &raw, &ok));
        CString s(raw, &manin_string_free);
        chunks.emplace_back(s.get());
        consistent = consistent && ok;
      }
      Output out(out_path);
      for (const auto& c : chunks) out.stream() << c;
    } else if (*co) {
      if (!type_one == !real_form) throw Failure{2, "construct needs --type or --real-form (not both)"};
      Ctx ctx = make_context(type_one, real_form);
      const std::string triple = json_arg(*triple_arg);
      std::optional<std::string> ext;
      if (ext_path) ext = json_arg(*ext_path);
      char* raw = nullptr;
      int ok = 1;
      check(manin_context_construct(ctx.get(), triple.c_str(), ext ? ext->c_str() : nullptr, &raw, &ok));
      CString s(raw, &manin_string_free);
      Output out(out_path);
      out.stream() << s.get();
      consistent = ok;
    } else if (*ve) {
      const std::string text = read_input(input);
      char* raw = nullptr;
      int ok = 1;
      check(manin_verify_document(text.c_str(), &raw, &ok));
      CString s(raw, &manin_string_free);
      Output out(out_path);
      out.stream() << s.get();
      consistent = ok;
    } else if (*re) {
      const std::string text = read_input(input);
      char* raw = nullptr;
      check(manin_report(text.c_str(), &raw));
      CString s(raw, &manin_string_free);
      Output out(out_path);
      out.stream() << s.get();
    }
    std::cout.flush();
    if (!consistent) std::cerr << "manin: a valid input failed the Manin verifier\n";
    return consistent ? 0 : 1;
  } catch (const Failure& f) {
    std::cerr << "manin: " << f.message << '\n';
    return f.code;
  }
}
