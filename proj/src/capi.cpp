#include "lvb/lvb.h"

#include <new>
#include <string>

#include "lvb/diagram_algorithm.hpp"
#include "lvb/inverse_algorithm.hpp"
#include "lvb/oracle.hpp"
#include "lvb/seq_algorithm.hpp"

struct lvb_seq {
    lvb::Seq v;
};

struct lvb_diagram {
    lvb::Diagram rows;
    mutable std::string text;
    mutable bool text_ready = false;
};

struct lvb_diagram_list {
    std::vector<lvb_diagram> items;
};

struct lvb_stages {
    struct entry {
        lvb_seq alpha, nu, sigma, mu;
    };
    std::vector<entry> items;
};

struct lvb_report {
    bool ok;
    std::string text;
    std::string json;
};

namespace {

thread_local std::string last_error;

lvb_status set_error(lvb_status s, std::string const & msg)
{
    last_error = msg;
    return s;
}

struct NullArgument {
    std::string what;
};

template <class F>
lvb_status guard(F && f)
{
    try {
        f();
        last_error.clear();
        return LVB_OK;
    } catch (NullArgument const & e) {
        return set_error(LVB_ERR_NULL_POINTER, e.what);
    } catch (lvb::Error const & e) {
        lvb_status s = LVB_ERR_INTERNAL;
        switch (e.code()) {
        case lvb::ErrorCode::invalid_argument: s = LVB_ERR_INVALID_ARGUMENT; break;
        case lvb::ErrorCode::overflow: s = LVB_ERR_OVERFLOW; break;
        case lvb::ErrorCode::internal: s = LVB_ERR_INTERNAL; break;
        case lvb::ErrorCode::limit: s = LVB_ERR_LIMIT; break;
        }
        return set_error(s, e.what());
    } catch (std::bad_alloc const &) {
        return set_error(LVB_ERR_OUT_OF_MEMORY, "out of memory");
    } catch (std::exception const & e) {
        return set_error(LVB_ERR_INTERNAL, e.what());
    }
}

lvb::Seq to_seq(int64_t const * p, size_t len, char const * what)
{
    if (len == 0)
        lvb::fail(lvb::ErrorCode::invalid_argument, std::string(what) + " is empty");
    if (!p)
        throw NullArgument{std::string(what) + " is a null pointer"};
    return lvb::Seq(p, p + len);
}

template <class T>
void need(T * p, char const * what)
{
    if (!p)
        throw NullArgument{std::string("null ") + what};
}

lvb_seq * wrap(lvb::Seq v)
{
    return new lvb_seq{std::move(v)};
}

lvb_diagram * wrap(lvb::Diagram d)
{
    auto * h = new lvb_diagram;
    h->rows = std::move(d);
    return h;
}

lvb_report * wrap(lvb::Report const & r)
{
    return new lvb_report{r.ok(), r.text(), r.json()};
}

lvb_diagram_list * wrap(std::vector<lvb::Diagram> ds)
{
    auto * l = new lvb_diagram_list;
    l->items.resize(ds.size());
    for (size_t k = 0; k < ds.size(); ++k)
        l->items[k].rows = std::move(ds[k]);
    return l;
}

}  // namespace

extern "C" {

const char * lvb_last_error(void)
{
    return last_error.c_str();
}

const char * lvb_status_name(lvb_status status)
{
    switch (status) {
    case LVB_OK: return "ok";
    case LVB_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LVB_ERR_OVERFLOW: return "integer overflow";
    case LVB_ERR_INTERNAL: return "internal error";
    case LVB_ERR_LIMIT: return "search limit exceeded";
    case LVB_ERR_NULL_POINTER: return "null pointer";
    case LVB_ERR_OUT_OF_MEMORY: return "out of memory";
    }
    return "unknown status";
}

size_t lvb_seq_size(const lvb_seq * s)
{
    return s ? s->v.size() : 0;
}

const int64_t * lvb_seq_data(const lvb_seq * s)
{
    return s ? s->v.data() : nullptr;
}

void lvb_seq_free(lvb_seq * s)
{
    delete s;
}

lvb_status lvb_diagram_from_rows(const int64_t * data, const size_t * row_lengths, size_t rows,
                                 lvb_diagram ** out)
{
    if (!out || (rows && (!row_lengths || !data)))
        return set_error(LVB_ERR_NULL_POINTER, "null argument");
    return guard([&] {
        lvb::Diagram d(rows);
        size_t off = 0;
        for (size_t i = 0; i < rows; ++i) {
            d[i].assign(data + off, data + off + row_lengths[i]);
            off += row_lengths[i];
        }
        lvb::require_diagram(d);
        *out = wrap(std::move(d));
    });
}

lvb_status lvb_diagram_parse(const char * text, lvb_diagram ** out)
{
    if (!text || !out)
        return set_error(LVB_ERR_NULL_POINTER, "null argument");
    return guard([&] { *out = wrap(lvb::parse_diagram(text)); });
}

size_t lvb_diagram_rows(const lvb_diagram * d)
{
    return d ? d->rows.size() : 0;
}

size_t lvb_diagram_row_length(const lvb_diagram * d, size_t row)
{
    return (d && row < d->rows.size()) ? d->rows[row].size() : 0;
}

const int64_t * lvb_diagram_row(const lvb_diagram * d, size_t row)
{
    return (d && row < d->rows.size()) ? d->rows[row].data() : nullptr;
}

const char * lvb_diagram_text(const lvb_diagram * d)
{
    if (!d)
        return "";
    if (!d->text_ready) {
        d->text = lvb::render(d->rows);
        d->text_ready = true;
    }
    return d->text.c_str();
}

void lvb_diagram_free(lvb_diagram * d)
{
    delete d;
}

size_t lvb_diagram_list_size(const lvb_diagram_list * l)
{
    return l ? l->items.size() : 0;
}

const lvb_diagram * lvb_diagram_list_get(const lvb_diagram_list * l, size_t k)
{
    return (l && k < l->items.size()) ? &l->items[k] : nullptr;
}

void lvb_diagram_list_free(lvb_diagram_list * l)
{
    delete l;
}

size_t lvb_stages_count(const lvb_stages * st)
{
    return st ? st->items.size() : 0;
}

lvb_status lvb_stages_get(const lvb_stages * st, size_t k, const lvb_seq ** alpha,
                          const lvb_seq ** nu, const lvb_seq ** sigma, const lvb_seq ** mu)
{
    if (!st)
        return set_error(LVB_ERR_NULL_POINTER, "null stages handle");
    if (k >= st->items.size())
        return set_error(LVB_ERR_INVALID_ARGUMENT, "stage index out of range");
    auto const & e = st->items[k];
    if (alpha) *alpha = &e.alpha;
    if (nu) *nu = &e.nu;
    if (sigma) *sigma = &e.sigma;
    if (mu) *mu = &e.mu;
    return LVB_OK;
}

void lvb_stages_free(lvb_stages * st)
{
    delete st;
}

int lvb_report_ok(const lvb_report * r)
{
    return r && r->ok ? 1 : 0;
}

const char * lvb_report_text(const lvb_report * r)
{
    return r ? r->text.c_str() : "";
}

const char * lvb_report_json(const lvb_report * r)
{
    return r ? r->json.c_str() : "";
}

void lvb_report_free(lvb_report * r)
{
    delete r;
}

lvb_status lvb_conjugate(const int64_t * alpha, size_t len, lvb_seq ** out)
{
    if (!out)
        return set_error(LVB_ERR_NULL_POINTER, "null out");
    return guard([&] {
        lvb::Seq a = to_seq(alpha, len, "alpha");
        lvb::require_partition(a, "alpha");
        *out = wrap(lvb::conjugate(a));
    });
}

lvb_status lvb_two_rho(const int64_t * alpha, size_t len, lvb_seq ** out)
{
    if (!out)
        return set_error(LVB_ERR_NULL_POINTER, "null out");
    return guard([&] {
        lvb::Seq a = to_seq(alpha, len, "alpha");
        lvb::require_partition(a, "alpha");
        *out = wrap(lvb::two_rho(a));
    });
}

lvb_status lvb_is_dominant_wrt(const int64_t * nu, const int64_t * alpha, size_t len, int * out)
{
    if (!out)
        return set_error(LVB_ERR_NULL_POINTER, "null out");
    return guard([&] {
        lvb::Seq a = to_seq(alpha, len, "alpha");
        lvb::Seq v = to_seq(nu, len, "nu");
        *out = lvb::is_dominant_wrt(v, a) ? 1 : 0;
    });
}

lvb_status lvb_alg_A(const int64_t * alpha, const int64_t * nu, size_t len, lvb_seq ** out)
{
    if (!out)
        return set_error(LVB_ERR_NULL_POINTER, "null out");
    return guard([&] {
        *out = wrap(lvb::alg_A(to_seq(alpha, len, "alpha"), to_seq(nu, len, "nu")));
    });
}

lvb_status lvb_alg_A_stages(const int64_t * alpha, const int64_t * nu, size_t len,
                            lvb_stages ** out)
{
    if (!out)
        return set_error(LVB_ERR_NULL_POINTER, "null out");
    return guard([&] {
        auto stages = lvb::alg_A_stages(to_seq(alpha, len, "alpha"), to_seq(nu, len, "nu"));
        auto * st = new lvb_stages;
        for (auto const & s : stages) {
            lvb::Seq sig;
            for (size_t v : s.sigma)
                sig.push_back(static_cast<lvb::Int>(v) + 1);
            st->items.push_back({{s.alpha}, {s.nu}, {sig}, {s.mu}});
        }
        *out = st;
    });
}

lvb_status lvb_gamma_forward(const int64_t * alpha, const int64_t * nu, size_t len, lvb_seq ** out)
{
    if (!out)
        return set_error(LVB_ERR_NULL_POINTER, "null out");
    return guard([&] {
        *out = wrap(lvb::gamma_forward(to_seq(alpha, len, "alpha"), to_seq(nu, len, "nu")));
    });
}

lvb_status lvb_gamma_via_diagrams(const int64_t * alpha, const int64_t * nu, size_t len,
                                  lvb_seq ** out)
{
    if (!out)
        return set_error(LVB_ERR_NULL_POINTER, "null out");
    return guard([&] {
        *out = wrap(lvb::gamma_via_diagrams(to_seq(alpha, len, "alpha"), to_seq(nu, len, "nu")));
    });
}

lvb_status lvb_alg_W(const int64_t * alpha, const int64_t * nu, size_t len, int eps,
                     lvb_diagram ** x, lvb_diagram ** y)
{
    if (!x || !y)
        return set_error(LVB_ERR_NULL_POINTER, "null out");
    return guard([&] {
        auto p = lvb::alg_W(to_seq(alpha, len, "alpha"), to_seq(nu, len, "nu"), eps);
        lvb_diagram * hx = wrap(std::move(p.x));
        try {
            *y = wrap(std::move(p.y));
        } catch (...) {
            delete hx;
            throw;
        }
        *x = hx;
    });
}

lvb_status lvb_clumps(const int64_t * lambda, size_t len, lvb_diagram ** out)
{
    if (!out)
        return set_error(LVB_ERR_NULL_POINTER, "null out");
    return guard([&] { *out = wrap(lvb::clumps(to_seq(lambda, len, "lambda"))); });
}

lvb_status lvb_majuscule_extract(const int64_t * clump, size_t len, int eps, lvb_seq ** majuscule,
                                 lvb_seq ** remainder)
{
    if (!majuscule || !remainder)
        return set_error(LVB_ERR_NULL_POINTER, "null out");
    return guard([&] {
        auto e = lvb::majuscule_extract(to_seq(clump, len, "clump"), eps);
        lvb_seq * m = wrap(std::move(e.majuscule));
        try {
            *remainder = wrap(std::move(e.remainder));
        } catch (...) {
            delete m;
            throw;
        }
        *majuscule = m;
    });
}

lvb_status lvb_alg_B(const int64_t * lambda, size_t len, int eps, lvb_diagram ** out)
{
    if (!out)
        return set_error(LVB_ERR_NULL_POINTER, "null out");
    return guard([&] { *out = wrap(lvb::alg_B(to_seq(lambda, len, "lambda"), eps)); });
}

lvb_status lvb_gamma_inverse(const int64_t * lambda, size_t len, lvb_seq ** alpha, lvb_seq ** nu)
{
    if (!alpha || !nu)
        return set_error(LVB_ERR_NULL_POINTER, "null out");
    return guard([&] {
        auto p = lvb::gamma_inverse(to_seq(lambda, len, "lambda"));
        lvb_seq * a = wrap(std::move(p.alpha));
        try {
            *nu = wrap(std::move(p.nu));
        } catch (...) {
            delete a;
            throw;
        }
        *alpha = a;
    });
}

#define LVB_DIAGRAM_MAP(name, fn)                                   \
    lvb_status name(const lvb_diagram * in, lvb_diagram ** out)     \
    {                                                               \
        if (!in || !out)                                            \
            return set_error(LVB_ERR_NULL_POINTER, "null argument"); \
        return guard([&] { *out = wrap(fn(in->rows)); });           \
    }

#define LVB_DIAGRAM_SEQ(name, fn)                                   \
    lvb_status name(const lvb_diagram * in, lvb_seq ** out)         \
    {                                                               \
        if (!in || !out)                                            \
            return set_error(LVB_ERR_NULL_POINTER, "null argument"); \
        return guard([&] { *out = wrap(fn(in->rows)); });           \
    }

LVB_DIAGRAM_MAP(lvb_e_map, lvb::e_map)
LVB_DIAGRAM_MAP(lvb_e_inverse, lvb::e_inverse)
LVB_DIAGRAM_SEQ(lvb_kappa, lvb::kappa)
LVB_DIAGRAM_SEQ(lvb_h_weight, lvb::h_weight)
LVB_DIAGRAM_SEQ(lvb_eta, lvb::eta)
LVB_DIAGRAM_SEQ(lvb_shape_class, lvb::shape_class)

lvb_status lvb_is_distinguished(const lvb_diagram * x, lvb_parity parity, int * out)
{
    if (!x || !out)
        return set_error(LVB_ERR_NULL_POINTER, "null argument");
    return guard([&] {
        if (parity != LVB_PARITY_ODD && parity != LVB_PARITY_EVEN)
            lvb::fail(lvb::ErrorCode::invalid_argument, "unknown parity");
        auto p = parity == LVB_PARITY_ODD ? lvb::Parity::odd : lvb::Parity::even;
        *out = lvb::is_distinguished(x->rows, p) ? 1 : 0;
    });
}

namespace {

lvb::Int pick_window(lvb::Seq const & alpha, int64_t window)
{
    return window < 0 ? lvb::default_window(alpha) : window;
}

}  // namespace

lvb_status lvb_min_norm_over_fillings(const int64_t * alpha, const int64_t * nu, size_t len,
                                      int64_t window, int64_t * out)
{
    if (!out)
        return set_error(LVB_ERR_NULL_POINTER, "null out");
    return guard([&] {
        lvb::Seq a = to_seq(alpha, len, "alpha");
        *out = lvb::min_norm_over_fillings(a, to_seq(nu, len, "nu"), pick_window(a, window));
    });
}

lvb_status lvb_enumerate_fillings(const int64_t * alpha, const int64_t * nu, size_t len,
                                  int64_t window, lvb_diagram_list ** out)
{
    if (!out)
        return set_error(LVB_ERR_NULL_POINTER, "null out");
    return guard([&] {
        lvb::Seq a = to_seq(alpha, len, "alpha");
        std::vector<lvb::Diagram> all;
        lvb::enumerate_fillings(a, to_seq(nu, len, "nu"), pick_window(a, window),
                                [&](lvb::Diagram const & x) { all.push_back(x); });
        *out = wrap(std::move(all));
    });
}

lvb_status lvb_distinguished_fillings(const int64_t * alpha, const int64_t * nu, size_t len,
                                      int64_t window, lvb_diagram_list ** out)
{
    if (!out)
        return set_error(LVB_ERR_NULL_POINTER, "null out");
    return guard([&] {
        lvb::Seq a = to_seq(alpha, len, "alpha");
        *out = wrap(lvb::distinguished_fillings(a, to_seq(nu, len, "nu"), pick_window(a, window)));
    });
}

lvb_status lvb_enumerate_omega(int64_t n_max, int64_t entry_bound, lvb_diagram ** alphas,
                               lvb_diagram ** nus)
{
    if (!alphas || !nus)
        return set_error(LVB_ERR_NULL_POINTER, "null out");
    return guard([&] {
        if (n_max < 1 || entry_bound < 0)
            lvb::fail(lvb::ErrorCode::invalid_argument, "need n_max >= 1 and entry_bound >= 0");
        lvb::Diagram as, vs;
        lvb::for_each_omega_pair(n_max, entry_bound, [&](lvb::Seq const & a, lvb::Seq const & v) {
            as.push_back(a);
            vs.push_back(v);
        });
        lvb_diagram * ha = wrap(std::move(as));
        try {
            *nus = wrap(std::move(vs));
        } catch (...) {
            delete ha;
            throw;
        }
        *alphas = ha;
    });
}

lvb_status lvb_roundtrip_sweep(int64_t n_max, int64_t entry_bound, lvb_report ** out)
{
    if (!out)
        return set_error(LVB_ERR_NULL_POINTER, "null out");
    return guard([&] { *out = wrap(lvb::roundtrip_sweep(n_max, entry_bound)); });
}

lvb_status lvb_oracle_sweep(int64_t n_max, int64_t entry_bound, int64_t window, lvb_report ** out)
{
    if (!out)
        return set_error(LVB_ERR_NULL_POINTER, "null out");
    return guard([&] { *out = wrap(lvb::oracle_sweep(n_max, entry_bound, window)); });
}

}  // extern "C"
