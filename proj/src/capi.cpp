#include "khecke/khecke.h"

#include <new>

#include "khecke/commands.hpp"

struct khecke_session {
  khecke::Session session;
  khecke::CommandResult last;
};

namespace {

const khecke::CommandSpec* spec_at(size_t cmd) {
  const auto& specs = khecke::command_specs();
  return cmd < specs.size() ? &specs[cmd] : nullptr;
}

const khecke::OptionSpec* option_at(size_t cmd, size_t opt) {
  const auto* s = spec_at(cmd);
  return s && opt < s->options.size() ? &s->options[opt] : nullptr;
}

}  // namespace

extern "C" {

const char* khecke_version(void) { return "0.1.0"; }

khecke_session* khecke_session_create(void) { return new (std::nothrow) khecke_session(); }

void khecke_session_destroy(khecke_session* s) { delete s; }

khecke_status khecke_session_set_cache_dir(khecke_session* s, const char* dir) {
  if (!s) return KHECKE_DOMAIN_ERROR;
  try {
    s->session.set_cache_dir(dir ? dir : "");
    return KHECKE_OK;
  } catch (...) {
    return KHECKE_INTERNAL_ERROR;
  }
}

khecke_status khecke_run(khecke_session* s, const char* command, size_t count, const char* const* keys,
                         const char* const* values) {
  if (!s) return KHECKE_DOMAIN_ERROR;
  try {
    khecke::Options opts;
    for (size_t i = 0; i < count; ++i) {
      if (!keys[i]) continue;
      opts[keys[i]] = values && values[i] ? values[i] : "";
    }
    s->last = s->session.run(command ? command : "", opts);
  } catch (const std::exception& e) {
    s->last = {khecke::Status::internal_error, "", e.what(), {}};
  } catch (...) {
    s->last = {khecke::Status::internal_error, "", "unknown failure", {}};
  }
  return static_cast<khecke_status>(s->last.status);
}

const char* khecke_output(const khecke_session* s) { return s ? s->last.output.c_str() : ""; }

const char* khecke_error_message(const khecke_session* s) { return s ? s->last.error.c_str() : ""; }

size_t khecke_warning_count(const khecke_session* s) { return s ? s->last.warnings.size() : 0; }

const char* khecke_warning(const khecke_session* s, size_t i) {
  return s && i < s->last.warnings.size() ? s->last.warnings[i].c_str() : nullptr;
}

size_t khecke_command_count(void) { return khecke::command_specs().size(); }

const char* khecke_command_name(size_t cmd) {
  const auto* s = spec_at(cmd);
  return s ? s->name.c_str() : nullptr;
}

const char* khecke_command_help(size_t cmd) {
  const auto* s = spec_at(cmd);
  return s ? s->help.c_str() : nullptr;
}

size_t khecke_option_count(size_t cmd) {
  const auto* s = spec_at(cmd);
  return s ? s->options.size() : 0;
}

const char* khecke_option_name(size_t cmd, size_t opt) {
  const auto* o = option_at(cmd, opt);
  return o ? o->name.c_str() : nullptr;
}

const char* khecke_option_help(size_t cmd, size_t opt) {
  const auto* o = option_at(cmd, opt);
  return o ? o->help.c_str() : nullptr;
}

khecke_option_kind khecke_option_kind_of(size_t cmd, size_t opt) {
  const auto* o = option_at(cmd, opt);
  if (!o) return KHECKE_OPT_TEXT;
  switch (o->kind) {
    case khecke::OptionKind::integer: return KHECKE_OPT_INT;
    case khecke::OptionKind::flag: return KHECKE_OPT_FLAG;
    default: return KHECKE_OPT_TEXT;
  }
}

}  // extern "C"
