#include "ehalg/ehalg.h"

#include <cstring>
#include <new>

#include "ehalg/fixtures.hpp"
#include "ehalg/reports.hpp"

struct ehalg_system {
  ehalg::SystemFile file;
};

struct ehalg_groupoid {
  ehalg::GroupoidFile file;
};

struct ehalg_report {
  ehalg::Report report;
};

namespace {

thread_local std::string last_error;

ehalg_status status_of(ehalg::ErrorKind kind) {
  switch (kind) {
    case ehalg::ErrorKind::InvalidArgument: return EHALG_ERR_INVALID_ARGUMENT;
    case ehalg::ErrorKind::Parse: return EHALG_ERR_PARSE;
    case ehalg::ErrorKind::Validation: return EHALG_ERR_VALIDATION;
    case ehalg::ErrorKind::Guard: return EHALG_ERR_GUARD;
    case ehalg::ErrorKind::Verification: return EHALG_ERR_VERIFICATION;
    case ehalg::ErrorKind::Io: return EHALG_ERR_IO;
  }
  return EHALG_ERR_INTERNAL;
}

template <class F>
ehalg_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return EHALG_OK;
  } catch (const ehalg::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  }
  return EHALG_ERR_INTERNAL;
}

ehalg::Limits limits_of(const ehalg_limits* l) {
  ehalg::Limits out;
  if (l) out = ehalg::Limits{l->guard_dim, l->bisect_guard, l->oracle_guard};
  return out;
}

template <class F>
ehalg_status run_command(ehalg_report** out, F&& body) {
  if (!out) {
    last_error = "null output pointer";
    return EHALG_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] { *out = new ehalg_report{body()}; });
}

char* copy_string(const std::string& s) {
  char* p = new char[s.size() + 1];
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void require_arg(const void* p, const char* what) {
  ehalg::require(p != nullptr, ehalg::ErrorKind::InvalidArgument, std::string("null ") + what);
}

}  // namespace

extern "C" {

const char* ehalg_version(void) { return "1.0.0"; }

const char* ehalg_last_error(void) { return last_error.c_str(); }

ehalg_limits ehalg_default_limits(void) {
  ehalg::Limits l;
  return ehalg_limits{l.guard_dim, l.bisect_guard, l.oracle_guard};
}

ehalg_status ehalg_system_parse(const char* text, ehalg_system** out) {
  return guarded([&] {
    require_arg(text, "text");
    require_arg(out, "output pointer");
    *out = new ehalg_system{ehalg::parse_system(text)};
  });
}

ehalg_status ehalg_system_load(const char* path, ehalg_system** out) {
  return guarded([&] {
    require_arg(path, "path");
    require_arg(out, "output pointer");
    *out = new ehalg_system{ehalg::parse_system(ehalg::read_file(path))};
  });
}

ehalg_status ehalg_system_fixture(const char* name, ehalg_system** out) {
  return guarded([&] {
    require_arg(name, "name");
    require_arg(out, "output pointer");
    for (const auto& fx : ehalg::all_fixtures())
      if (fx.name == name) {
        *out = new ehalg_system{ehalg::SystemFile{std::nullopt, fx.system.spec()}};
        return;
      }
    ehalg::fail(ehalg::ErrorKind::InvalidArgument, std::string("unknown fixture '") + name + "'");
  });
}

ehalg_status ehalg_system_set_field(ehalg_system* sys, const char* field) {
  return guarded([&] {
    require_arg(sys, "system");
    require_arg(field, "field");
    sys->file.field = ehalg::Field::parse(field);
  });
}

ehalg_status ehalg_system_serialize(const ehalg_system* sys, char** out) {
  return guarded([&] {
    require_arg(sys, "system");
    require_arg(out, "output pointer");
    *out = copy_string(ehalg::serialize_system(sys->file));
  });
}

void ehalg_system_free(ehalg_system* sys) { delete sys; }

ehalg_status ehalg_groupoid_parse(const char* text, ehalg_groupoid** out) {
  return guarded([&] {
    require_arg(text, "text");
    require_arg(out, "output pointer");
    *out = new ehalg_groupoid{ehalg::parse_groupoid(text)};
  });
}

ehalg_status ehalg_groupoid_load(const char* path, ehalg_groupoid** out) {
  return guarded([&] {
    require_arg(path, "path");
    require_arg(out, "output pointer");
    *out = new ehalg_groupoid{ehalg::parse_groupoid(ehalg::read_file(path))};
  });
}

ehalg_status ehalg_groupoid_set_field(ehalg_groupoid* g, const char* field) {
  return guarded([&] {
    require_arg(g, "groupoid");
    require_arg(field, "field");
    g->file.field = ehalg::Field::parse(field);
  });
}

ehalg_status ehalg_groupoid_serialize(const ehalg_groupoid* g, char** out) {
  return guarded([&] {
    require_arg(g, "groupoid");
    require_arg(out, "output pointer");
    *out = copy_string(ehalg::serialize_groupoid(g->file));
  });
}

void ehalg_groupoid_free(ehalg_groupoid* g) { delete g; }

void ehalg_string_free(char* s) { delete[] s; }

ehalg_status ehalg_path_is_groupoid(const char* path, int* is_groupoid) {
  return guarded([&] {
    require_arg(path, "path");
    require_arg(is_groupoid, "output pointer");
    *is_groupoid = ehalg::looks_like_groupoid(ehalg::read_file(path)) ? 1 : 0;
  });
}

ehalg_status ehalg_cmd_validate(const ehalg_system* sys, ehalg_report** out) {
  return run_command(out, [&] {
    require_arg(sys, "system");
    return ehalg::cmd_validate(sys->file);
  });
}

ehalg_status ehalg_cmd_validate_groupoid(const ehalg_groupoid* g, ehalg_report** out) {
  return run_command(out, [&] {
    require_arg(g, "groupoid");
    return ehalg::cmd_validate_groupoid(g->file);
  });
}

ehalg_status ehalg_cmd_build(const ehalg_system* sys, const ehalg_limits* limits, ehalg_report** out) {
  return run_command(out, [&] {
    require_arg(sys, "system");
    return ehalg::cmd_build(sys->file, limits_of(limits));
  });
}

ehalg_status ehalg_cmd_germs(const ehalg_system* sys, const ehalg_limits* limits, ehalg_report** out) {
  return run_command(out, [&] {
    require_arg(sys, "system");
    return ehalg::cmd_germs(sys->file, limits_of(limits));
  });
}

ehalg_status ehalg_cmd_decompose(const ehalg_system* sys, const char* const* generators, size_t count,
                                 const ehalg_limits* limits, ehalg_report** out) {
  return run_command(out, [&] {
    require_arg(sys, "system");
    std::vector<std::string> gens;
    for (size_t i = 0; i < count; ++i) {
      require_arg(generators[i], "generator");
      gens.emplace_back(generators[i]);
    }
    return ehalg::cmd_decompose(sys->file, gens, limits_of(limits));
  });
}

ehalg_status ehalg_cmd_isocheck(const ehalg_system* sys, const ehalg_limits* limits, ehalg_report** out) {
  return run_command(out, [&] {
    require_arg(sys, "system");
    return ehalg::cmd_isocheck(sys->file, limits_of(limits));
  });
}

ehalg_status ehalg_cmd_bisect(const ehalg_groupoid* g, const ehalg_limits* limits, ehalg_report** out) {
  return run_command(out, [&] {
    require_arg(g, "groupoid");
    return ehalg::cmd_bisect(g->file, limits_of(limits));
  });
}

ehalg_status ehalg_cmd_oracle(const ehalg_system* sys, const ehalg_limits* limits, ehalg_report** out) {
  return run_command(out, [&] {
    require_arg(sys, "system");
    return ehalg::cmd_oracle(sys->file, limits_of(limits));
  });
}

ehalg_status ehalg_cmd_fixtures(const ehalg_limits* limits, ehalg_report** out) {
  return run_command(out, [&] { return ehalg::cmd_fixtures(limits_of(limits)); });
}

int ehalg_report_ok(const ehalg_report* r) { return r && r->report.ok ? 1 : 0; }

const char* ehalg_report_json(const ehalg_report* r) { return r ? r->report.json.c_str() : ""; }

const char* ehalg_report_text(const ehalg_report* r) { return r ? r->report.text.c_str() : ""; }

void ehalg_report_free(ehalg_report* r) { delete r; }

}  // extern "C"
