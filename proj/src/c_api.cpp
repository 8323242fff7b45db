#include "gdalex/gda_lex.h"

#include <algorithm>
#include <bit>
#include <memory>
#include <new>
#include <string>

#include "gdalex/closed_form.hpp"
#include "gdalex/error.hpp"
#include "gdalex/oracle.hpp"
#include "gdalex/sequence.hpp"
#include "gdalex/verify.hpp"

struct gdalex_result {
  gdalex::GammaResult inner;
};

struct gdalex_value_table {
  gdalex::ValueTable inner;
};

namespace {

thread_local std::string last_error;

gdalex::FactorKind kind_of(gdalex_kind k) {
  if (k == GDALEX_PATH) return gdalex::FactorKind::path;
  if (k == GDALEX_CYCLE) return gdalex::FactorKind::cycle;
  throw gdalex::InputError("unknown factor kind");
}

// Runs `body`, translating exceptions into status codes.
template <class F>
gdalex_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return GDALEX_OK;
  } catch (const gdalex::InputError& e) {
    last_error = e.what();
    return GDALEX_ERR_INPUT;
  } catch (const gdalex::UnsupportedError& e) {
    last_error = e.what();
    return GDALEX_ERR_UNSUPPORTED;
  } catch (const gdalex::PreconditionError& e) {
    last_error = e.what();
    return GDALEX_ERR_PRECONDITION;
  } catch (const gdalex::InfeasibleError& e) {
    last_error = e.what();
    return GDALEX_ERR_INFEASIBLE;
  } catch (const gdalex::IoError& e) {
    last_error = e.what();
    return GDALEX_ERR_IO;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return GDALEX_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return GDALEX_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return GDALEX_ERR_INTERNAL;
  }
}

template <class T, class Src>
int copy_out(const Src& src, T* buf, size_t cap) {
  if (buf) std::copy_n(src.begin(), std::min(cap, src.size()), buf);
  return static_cast<int>(src.size());
}

}  // namespace

extern "C" {

gdalex_status gdalex_compute(gdalex_kind g1, int n, gdalex_kind g2, int m, gdalex_method method,
                             unsigned flags, const gdalex_value_table* table,
                             gdalex_result** out) {
  return guarded([&] {
    if (!out) throw gdalex::InputError("null output pointer");
    *out = nullptr;
    gdalex::ProductSpec spec({kind_of(g1), n}, {kind_of(g2), m});
    const gdalex::ValueTable* vt = table ? &table->inner : nullptr;
    auto res = std::make_unique<gdalex_result>();
    switch (method) {
      case GDALEX_METHOD_SUBSETS:
        res->inner = gdalex::min_gda_subsets(spec);
        break;
      case GDALEX_METHOD_COLUMN_DP:
        res->inner = gdalex::min_gda_columns(spec);
        break;
      case GDALEX_METHOD_SEQUENCE_DP: {
        const auto& t = vt ? *vt : gdalex::cached_value_table(spec.g2());
        if (!(t.g2 == spec.g2())) throw gdalex::InputError("value table is for a different G2");
        auto ctx = gdalex::make_sequence_context(spec.g1().kind, spec.n(), t);
        res->inner = gdalex::min_sequence_value(ctx, gdalex::default_max_part(spec.m()));
        break;
      }
      case GDALEX_METHOD_CLOSED_FORM:
        res->inner = gdalex::gamma(spec, {(flags & GDALEX_FLAG_THRESHOLDS) != 0, vt});
        break;
      default:
        throw gdalex::InputError("unknown method");
    }
    *out = res.release();
  });
}

long gdalex_result_value(const gdalex_result* r) { return r ? r->inner.value : -1; }

gdalex_method gdalex_result_method(const gdalex_result* r) {
  return r ? static_cast<gdalex_method>(r->inner.method) : GDALEX_METHOD_CLOSED_FORM;
}

int gdalex_result_family(const gdalex_result* r) { return r ? r->inner.family : 0; }

int gdalex_result_threshold_fallback(const gdalex_result* r) {
  return r && r->inner.threshold_fallback ? 1 : 0;
}

int gdalex_result_sequence(const gdalex_result* r, int* buf, size_t cap) {
  if (!r || !r->inner.sequence) return -1;
  return copy_out(r->inner.sequence->parts(), buf, cap);
}

int gdalex_result_witness_profile(const gdalex_result* r, int* buf, size_t cap) {
  if (!r || !r->inner.witness) return -1;
  return copy_out(gdalex::column_profile(*r->inner.witness), buf, cap);
}

int gdalex_result_witness_masks(const gdalex_result* r, uint64_t* buf, size_t cap) {
  if (!r || !r->inner.witness) return -1;
  return copy_out(r->inner.witness->masks(), buf, cap);
}

void gdalex_result_free(gdalex_result* r) { delete r; }

gdalex_status gdalex_value_table_compute(gdalex_kind g2, int m, int k_max,
                                         gdalex_value_table** out) {
  return guarded([&] {
    if (!out) throw gdalex::InputError("null output pointer");
    *out = nullptr;
    auto t = std::make_unique<gdalex_value_table>();
    t->inner = gdalex::compute_value_table({kind_of(g2), m}, k_max);
    *out = t.release();
  });
}

gdalex_status gdalex_value_table_load(const char* path, gdalex_value_table** out) {
  return guarded([&] {
    if (!out || !path) throw gdalex::InputError("null argument");
    *out = nullptr;
    auto t = std::make_unique<gdalex_value_table>();
    t->inner = gdalex::load_value_table(path);
    *out = t.release();
  });
}

gdalex_status gdalex_value_table_save(const gdalex_value_table* t, const char* path) {
  return guarded([&] {
    if (!t || !path) throw gdalex::InputError("null argument");
    gdalex::save_value_table(t->inner, path);
  });
}

gdalex_status gdalex_value_table_get(const gdalex_value_table* t, int k, int internal,
                                     long* value) {
  return guarded([&] {
    if (!t || !value) throw gdalex::InputError("null argument");
    *value = internal ? t->inner.internal(k) : t->inner.external(k);
  });
}

int gdalex_value_table_k_max(const gdalex_value_table* t) { return t ? t->inner.k_max : -1; }

void gdalex_value_table_free(gdalex_value_table* t) { delete t; }

const char* gdalex_last_error(void) { return last_error.c_str(); }

const char* gdalex_version(void) {
  static const std::string v(gdalex::tool_version());
  return v.c_str();
}

const char* gdalex_method_name(gdalex_method method) {
  switch (method) {
    case GDALEX_METHOD_SUBSETS:
      return "subsets";
    case GDALEX_METHOD_COLUMN_DP:
      return "column-dp";
    case GDALEX_METHOD_SEQUENCE_DP:
      return "sequence-dp";
    case GDALEX_METHOD_CLOSED_FORM:
      return "closed-form";
  }
  return "unknown";
}

}  // extern "C"
