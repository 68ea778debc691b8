#include "tucker/tucker.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "tucker/asteroidal.hpp"
#include "tucker/errors.hpp"
#include "tucker/generators.hpp"
#include "tucker/min_tucker.hpp"
#include "tucker/oracle.hpp"

struct tucker_matrix {
  tucker::BinaryMatrix m;
};

struct tucker_witness {
  tucker::TuckerWitness w;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::string detector;
  long ell = -1;
};

namespace {

thread_local std::string last_error;

tucker_status fail(tucker_status s, const char* what) {
  last_error = what;
  return s;
}

// Runs body, translating exceptions into status codes.
template <class Body>
tucker_status guarded(Body&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const tucker::ParseError& e) {
    return fail(TUCKER_ERR_PARSE, e.what());
  } catch (const tucker::IoError& e) {
    return fail(TUCKER_ERR_IO, e.what());
  } catch (const tucker::InvalidArgument& e) {
    return fail(TUCKER_ERR_INVALID_ARGUMENT, e.what());
  } catch (const tucker::BoundExceeded& e) {
    return fail(TUCKER_ERR_BOUND_EXCEEDED, e.what());
  } catch (const std::bad_alloc&) {
    return fail(TUCKER_ERR_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(TUCKER_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(TUCKER_ERR_INTERNAL, "unknown error");
  }
}

#define TUCKER_REQUIRE(cond)                                                   \
  do {                                                                         \
    if (!(cond)) return fail(TUCKER_ERR_INVALID_ARGUMENT, "null or invalid argument: " #cond); \
  } while (0)

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

tucker::MatrixFormat to_format(tucker_format f) {
  switch (f) {
    case TUCKER_FORMAT_DENSE: return tucker::MatrixFormat::Dense;
    case TUCKER_FORMAT_SPARSE: return tucker::MatrixFormat::Sparse;
  }
  throw tucker::InvalidArgument("unknown matrix format");
}

tucker::TuckerKind to_kind(tucker_kind k) {
  if (k < TUCKER_KIND_I || k > TUCKER_KIND_V) throw tucker::InvalidArgument("unknown pattern kind");
  return static_cast<tucker::TuckerKind>(k);
}

tucker::SearchOptions to_search(const tucker_options* o) {
  tucker::SearchOptions s;
  if (!o) return s;
  s.workers = o->workers;
  if (o->mode != TUCKER_MODE_CONDITIONAL && o->mode != TUCKER_MODE_EXACT) {
    throw tucker::InvalidArgument("unknown search mode");
  }
  s.mode = o->mode == TUCKER_MODE_EXACT ? tucker::SearchMode::Exact : tucker::SearchMode::Conditional;
  return s;
}

tucker::OracleBounds to_bounds(const tucker_oracle_bounds* b) {
  tucker::OracleBounds out;
  if (b) {
    out.max_cols = b->max_cols;
    out.max_dim = b->max_dim;
  }
  if (out.max_cols > 20 || out.max_dim > 12) throw tucker::InvalidArgument("oracle bounds above the hard limit (20 columns, 12 per side)");
  return out;
}

tucker_witness* make_witness(const tucker::BinaryMatrix& m, tucker::TuckerWitness w, std::string detector, long ell) {
  auto* out = new tucker_witness{std::move(w), {}, {}, std::move(detector), ell};
  for (auto r : out->w.rows) out->row_labels.push_back(m.row_label(r));
  for (auto c : out->w.cols) out->col_labels.push_back(m.col_label(c));
  return out;
}

// Input-coordinate copy of a witness found on the normalized matrix.
tucker::TuckerWitness to_input(const tucker::Normalization& norm, tucker::TuckerWitness w) {
  for (auto& r : w.rows) r = norm.row_origin[r];
  for (auto& c : w.cols) c = norm.col_origin[c];
  return w;
}

}  // namespace

extern "C" {

const char* tucker_version(void) { return "1.0.0"; }

const char* tucker_last_error(void) { return last_error.c_str(); }

const char* tucker_status_name(tucker_status status) {
  switch (status) {
    case TUCKER_OK: return "ok";
    case TUCKER_ERR_PARSE: return "parse error";
    case TUCKER_ERR_IO: return "i/o error";
    case TUCKER_ERR_INVALID_ARGUMENT: return "invalid argument";
    case TUCKER_ERR_BOUND_EXCEEDED: return "bound exceeded";
    case TUCKER_ERR_UNSUPPORTED: return "unsupported";
    case TUCKER_ERR_INTERNAL: return "internal error";
    case TUCKER_ERR_OUT_OF_MEMORY: return "out of memory";
  }
  return "unknown status";
}

void tucker_string_free(char* s) { std::free(s); }

tucker_options tucker_default_options(void) { return {1, TUCKER_MODE_CONDITIONAL}; }

tucker_oracle_bounds tucker_default_oracle_bounds(void) {
  const tucker::OracleBounds b;
  return {b.max_cols, b.max_dim};
}

tucker_status tucker_matrix_parse(const char* text, size_t length, tucker_format format, tucker_matrix** out) {
  TUCKER_REQUIRE(out && (text || length == 0));
  return guarded([&] {
    *out = new tucker_matrix{tucker::parse_matrix(std::string_view(text ? text : "", length), to_format(format))};
    return TUCKER_OK;
  });
}

tucker_status tucker_matrix_load(const char* path, tucker_format format, tucker_matrix** out) {
  TUCKER_REQUIRE(path && out);
  return guarded([&] {
    *out = new tucker_matrix{tucker::load_matrix(path, to_format(format))};
    return TUCKER_OK;
  });
}

tucker_status tucker_matrix_create(size_t rows, size_t cols, tucker_matrix** out) {
  TUCKER_REQUIRE(out);
  return guarded([&] {
    *out = new tucker_matrix{tucker::BinaryMatrix(rows, cols)};
    return TUCKER_OK;
  });
}

tucker_status tucker_matrix_random(size_t rows, size_t cols, double density, uint64_t seed, tucker_matrix** out) {
  TUCKER_REQUIRE(out);
  return guarded([&] {
    *out = new tucker_matrix{tucker::random_matrix(rows, cols, density, seed)};
    return TUCKER_OK;
  });
}

tucker_status tucker_matrix_pattern(tucker_kind kind, int k, tucker_matrix** out) {
  TUCKER_REQUIRE(out);
  return guarded([&] {
    *out = new tucker_matrix{tucker::pattern_matrix({to_kind(kind), k})};
    return TUCKER_OK;
  });
}

tucker_status tucker_matrix_planted(tucker_kind kind, int k, size_t rows, size_t cols, uint64_t seed,
                                    tucker_matrix** out, tucker_witness** planted) {
  TUCKER_REQUIRE(out);
  return guarded([&] {
    const tucker::TuckerType type{to_kind(kind), k};
    auto p = tucker::planted_matrix(type, rows, cols, seed);
    auto* m = new tucker_matrix{std::move(p.matrix)};
    if (planted) {
      try {
        *planted = make_witness(m->m, {type, std::move(p.rows), std::move(p.cols)}, "planted", -1);
      } catch (...) {
        delete m;
        throw;
      }
    }
    *out = m;
    return TUCKER_OK;
  });
}

void tucker_matrix_free(tucker_matrix* m) { delete m; }

size_t tucker_matrix_rows(const tucker_matrix* m) { return m ? m->m.rows() : 0; }
size_t tucker_matrix_cols(const tucker_matrix* m) { return m ? m->m.cols() : 0; }

tucker_status tucker_matrix_get(const tucker_matrix* m, size_t row, size_t col, int* value) {
  TUCKER_REQUIRE(m && value);
  TUCKER_REQUIRE(row < m->m.rows() && col < m->m.cols());
  *value = m->m.get(row, col) ? 1 : 0;
  return TUCKER_OK;
}

tucker_status tucker_matrix_set(tucker_matrix* m, size_t row, size_t col, int value) {
  TUCKER_REQUIRE(m);
  TUCKER_REQUIRE(row < m->m.rows() && col < m->m.cols());
  TUCKER_REQUIRE(value == 0 || value == 1);
  m->m.set(row, col, value == 1);
  return TUCKER_OK;
}

tucker_status tucker_matrix_row_label(const tucker_matrix* m, size_t row, char** out) {
  TUCKER_REQUIRE(m && out && row < m->m.rows());
  return guarded([&] {
    *out = dup_string(m->m.row_label(row));
    return TUCKER_OK;
  });
}

tucker_status tucker_matrix_col_label(const tucker_matrix* m, size_t col, char** out) {
  TUCKER_REQUIRE(m && out && col < m->m.cols());
  return guarded([&] {
    *out = dup_string(m->m.col_label(col));
    return TUCKER_OK;
  });
}

tucker_status tucker_matrix_stats(const tucker_matrix* m, size_t* ones, size_t* max_row_weight) {
  TUCKER_REQUIRE(m);
  const auto s = tucker::stats(m->m);
  if (ones) *ones = s.ones;
  if (max_row_weight) *max_row_weight = s.max_row_weight;
  return TUCKER_OK;
}

tucker_status tucker_matrix_serialize(const tucker_matrix* m, tucker_format format, char** out) {
  TUCKER_REQUIRE(m && out);
  return guarded([&] {
    *out = dup_string(tucker::serialize_matrix(m->m, to_format(format)));
    return TUCKER_OK;
  });
}

tucker_status tucker_matrix_normalize(const tucker_matrix* m, tucker_matrix** out) {
  TUCKER_REQUIRE(m && out);
  return guarded([&] {
    *out = new tucker_matrix{tucker::normalize(m->m).matrix};
    return TUCKER_OK;
  });
}

tucker_status tucker_check_c1p(const tucker_matrix* m, const tucker_options* opts, int* is_c1p,
                               tucker_witness** witness) {
  TUCKER_REQUIRE(m && is_c1p);
  return guarded([&] {
    auto r = tucker::check_c1p(m->m, to_search(opts));
    *is_c1p = r.c1p ? 1 : 0;
    if (witness) {
      *witness = nullptr;
      if (r.obstruction) {
        const long ell = r.obstruction->ell ? static_cast<long>(*r.obstruction->ell) : -1;
        *witness = make_witness(m->m, std::move(r.obstruction->witness), r.obstruction->detector, ell);
      }
    }
    return TUCKER_OK;
  });
}

tucker_status tucker_find_min(const tucker_matrix* m, const tucker_options* opts, tucker_witness** out) {
  TUCKER_REQUIRE(out);
  int c1p = 0;
  return tucker_check_c1p(m, opts, &c1p, out);
}

tucker_status tucker_find_type(const tucker_matrix* m, tucker_kind kind, const tucker_options* opts,
                               tucker_outcome* outcome, unsigned* superseded_mask, tucker_witness** out) {
  TUCKER_REQUIRE(m && outcome && out);
  return guarded([&] {
    const auto k = to_kind(kind);
    const auto search = to_search(opts);
    if (k == tucker::TuckerKind::II) {
      return fail(TUCKER_ERR_UNSUPPORTED, "no detector for type II; use the oracle on small instances");
    }
    *out = nullptr;
    *outcome = TUCKER_NOT_FOUND;
    if (superseded_mask) *superseded_mask = 0;
    const auto norm = tucker::normalize(m->m);
    if (norm.trivially_c1p()) return TUCKER_OK;
    const tucker::BipartiteGraph g(norm.matrix);
    const tucker::DetectorOptions dopts{search.workers};

    std::optional<tucker::TuckerWitness> w;
    std::string name;
    if (k == tucker::TuckerKind::I) {
      w = tucker::find_min_type1(g, dopts);
      name = "type1";
    } else if (search.mode == tucker::SearchMode::Exact) {
      switch (k) {
        case tucker::TuckerKind::III: w = tucker::find_min_type3(g, dopts); break;
        case tucker::TuckerKind::IV: w = tucker::find_type4(g, dopts); break;
        default: w = tucker::find_type5(g, dopts); break;
      }
      name = "type" + std::to_string(static_cast<int>(k));
    } else {
      tucker::DetectorOutcome o;
      switch (k) {
        case tucker::TuckerKind::III: o = tucker::find_type3_conditional(g, dopts); break;
        case tucker::TuckerKind::IV: o = tucker::find_type4_conditional(g, dopts); break;
        default: o = tucker::find_type5_conditional(g, dopts); break;
      }
      name = "type" + std::to_string(static_cast<int>(k)) + "_conditional";
      if (o.status == tucker::OutcomeStatus::Superseded) {
        *outcome = TUCKER_SUPERSEDED;
        if (superseded_mask) *superseded_mask = o.superseded_by.bits();
        return TUCKER_OK;
      }
      w = std::move(o.witness);
    }
    if (w) {
      *out = make_witness(m->m, to_input(norm, std::move(*w)), name, -1);
      *outcome = TUCKER_FOUND;
    }
    return TUCKER_OK;
  });
}

tucker_status tucker_min_triple(const tucker_matrix* m, const tucker_options* opts, int* found, size_t* ell,
                                tucker_witness** span) {
  TUCKER_REQUIRE(m && found);
  return guarded([&] {
    const auto search = to_search(opts);
    *found = 0;
    if (span) *span = nullptr;
    const auto norm = tucker::normalize(m->m);
    if (norm.trivially_c1p()) return TUCKER_OK;
    const tucker::BipartiteGraph g(norm.matrix);
    const auto t = tucker::find_min_triple(g, {search.workers});
    if (!t) return TUCKER_OK;
    *found = 1;
    if (ell) *ell = t->ell;
    if (span) {
      const auto s = tucker::triple_span(g, *t);
      *span = make_witness(m->m, to_input(norm, tucker::certify(g, s.vertices, s.type)), "triple",
                           static_cast<long>(t->ell));
    }
    return TUCKER_OK;
  });
}

tucker_status tucker_oracle_c1p(const tucker_matrix* m, const tucker_oracle_bounds* bounds, int* is_c1p) {
  TUCKER_REQUIRE(m && is_c1p);
  return guarded([&] {
    *is_c1p = tucker::oracle_c1p(m->m, to_bounds(bounds)) ? 1 : 0;
    return TUCKER_OK;
  });
}

tucker_status tucker_oracle_min(const tucker_matrix* m, const tucker_oracle_bounds* bounds, tucker_witness** out) {
  TUCKER_REQUIRE(m && out);
  return guarded([&] {
    *out = nullptr;
    if (auto w = tucker::oracle_min_obstruction(m->m, to_bounds(bounds))) *out = make_witness(m->m, *w, "oracle", -1);
    return TUCKER_OK;
  });
}

tucker_status tucker_oracle_min_of_kind(const tucker_matrix* m, tucker_kind kind, const tucker_oracle_bounds* bounds,
                                        tucker_witness** out) {
  TUCKER_REQUIRE(m && out);
  return guarded([&] {
    *out = nullptr;
    const auto per = tucker::oracle_min_by_type(m->m, to_bounds(bounds));
    const auto& w = per[static_cast<int>(to_kind(kind)) - 1];
    if (w) *out = make_witness(m->m, *w, "oracle", -1);
    return TUCKER_OK;
  });
}

tucker_status tucker_oracle_is_minimal(const tucker_matrix* m, const tucker_oracle_bounds* bounds, int* is_minimal) {
  TUCKER_REQUIRE(m && is_minimal);
  return guarded([&] {
    *is_minimal = tucker::oracle_is_minimal_pattern(m->m, to_bounds(bounds)) ? 1 : 0;
    return TUCKER_OK;
  });
}

void tucker_witness_free(tucker_witness* w) { delete w; }

tucker_kind tucker_witness_kind(const tucker_witness* w) { return static_cast<tucker_kind>(w->w.type.kind); }
int tucker_witness_k(const tucker_witness* w) { return w->w.type.k; }
size_t tucker_witness_size(const tucker_witness* w) { return w->w.size(); }
size_t tucker_witness_row_count(const tucker_witness* w) { return w->w.rows.size(); }
size_t tucker_witness_col_count(const tucker_witness* w) { return w->w.cols.size(); }
size_t tucker_witness_row(const tucker_witness* w, size_t i) { return w->w.rows.at(i); }
size_t tucker_witness_col(const tucker_witness* w, size_t i) { return w->w.cols.at(i); }
const char* tucker_witness_detector(const tucker_witness* w) { return w->detector.c_str(); }
long tucker_witness_ell(const tucker_witness* w) { return w->ell; }

tucker_status tucker_witness_to_json(const tucker_witness* w, char** out) {
  TUCKER_REQUIRE(w && out);
  return guarded([&] {
    nlohmann::ordered_json j;
    j["c1p"] = false;
    j["type"] = std::string(tucker::kind_name(w->w.type.kind));
    j["k"] = w->w.type.k;
    j["rows"] = w->row_labels;
    j["cols"] = w->col_labels;
    j["size"] = w->w.size();
    j["detector"] = w->detector;
    if (w->ell >= 0) j["ell"] = w->ell;
    *out = dup_string(j.dump());
    return TUCKER_OK;
  });
}

}  // extern "C"
