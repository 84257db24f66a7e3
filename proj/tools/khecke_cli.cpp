#include <CLI11.hpp>

#include <cstdio>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "khecke/khecke.h"

namespace {

struct Sub {
  std::string name;
  CLI::App* app = nullptr;
  std::map<std::string, std::string> text;
  std::map<std::string, std::optional<long long>> ints;
  std::map<std::string, bool> flags;
};

int exit_code(khecke_status s) {
  switch (s) {
    case KHECKE_OK: return 0;
    case KHECKE_VERIFICATION_FAILED: return 2;
    default: return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"K-theoretic affine Schubert calculus toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", khecke_version());

  std::string format = "text";
  std::string cache_dir;
  std::vector<std::unique_ptr<Sub>> subs;
  for (size_t c = 0; c < khecke_command_count(); ++c) {
    auto sub = std::make_unique<Sub>();
    sub->name = khecke_command_name(c);
    sub->app = app.add_subcommand(sub->name, khecke_command_help(c));
    sub->app->add_option("--format", format, "text, json or latex-table")
        ->check(CLI::IsMember({"text", "json", "latex-table"}));
    sub->app->add_option("--cache-dir", cache_dir, "expansion cache directory (KHECKE_CACHE wins)");
    for (size_t o = 0; o < khecke_option_count(c); ++o) {
      std::string name = khecke_option_name(c, o);
      std::string help = khecke_option_help(c, o);
      switch (khecke_option_kind_of(c, o)) {
        case KHECKE_OPT_FLAG:
          sub->app->add_flag("--" + name, sub->flags[name], help);
          break;
        case KHECKE_OPT_INT:
          sub->app->add_option("--" + name, sub->ints[name], help);
          break;
        default:
          sub->text[name];
          sub->app->add_option("--" + name, sub->text[name], help);
          break;
      }
    }
    subs.push_back(std::move(sub));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }

  for (const auto& sub : subs) {
    if (!sub->app->parsed()) continue;
    std::vector<std::string> keys, values;
    keys.push_back("format");
    values.push_back(format);
    for (const auto& [name, value] : sub->text)
      if (sub->app->count("--" + name)) keys.push_back(name), values.push_back(value);
    for (const auto& [name, value] : sub->ints)
      if (value) keys.push_back(name), values.push_back(std::to_string(*value));
    for (const auto& [name, on] : sub->flags)
      if (on) keys.push_back(name), values.push_back("1");

    std::vector<const char*> k, v;
    for (size_t i = 0; i < keys.size(); ++i) k.push_back(keys[i].c_str()), v.push_back(values[i].c_str());

    khecke_session* s = khecke_session_create();
    if (!s) return 1;
    khecke_session_set_cache_dir(s, cache_dir.c_str());
    khecke_status st = khecke_run(s, sub->name.c_str(), k.size(), k.data(), v.data());
    for (size_t i = 0; i < khecke_warning_count(s); ++i) std::fprintf(stderr, "warning: %s\n", khecke_warning(s, i));
    std::fputs(khecke_output(s), stdout);
    std::fflush(stdout);
    if (*khecke_error_message(s)) std::fprintf(stderr, "error: %s\n", khecke_error_message(s));
    khecke_session_destroy(s);
    return exit_code(st);
  }
  return 1;
}
