#include "turanwb/cache.hpp"

#include <fstream>
#include <sstream>

#include "turanwb/errors.hpp"

namespace turan {

namespace {

constexpr const char* kMagic = "turanwb-record 1";

void verify_record(const ExtremalRecord& rec, const std::string& forbidden_text) {
    switch (rec.kind) {
        case RecordKind::ex_hypergraph: {
            const auto* w = std::get_if<Hypergraph>(&rec.witness);
            if (!w) throw CorruptRecord("ex record without hypergraph witness");
            Hypergraph h = Hypergraph::from_text(forbidden_text);
            if (w->vertex_count() != rec.n || w->uniformity() != rec.d)
                throw CorruptRecord("witness shape mismatch");
            if (static_cast<long long>(w->edge_count()) != rec.value)
                throw CorruptRecord("witness does not attain the recorded value");
            if (contains(*w, h)) throw CorruptRecord("witness contains the forbidden hypergraph");
            break;
        }
        case RecordKind::f_lettered: {
            const auto* w = std::get_if<LetteredHypergraph>(&rec.witness);
            if (!w) throw CorruptRecord("f record without lettered witness");
            Hypergraph h = Hypergraph::from_text(forbidden_text);
            if (w->base.vertex_count() != rec.n || w->base.uniformity() != rec.d)
                throw CorruptRecord("witness shape mismatch");
            auto lr = validate_lettering(*w, rec.k);
            if (!lr.ok() || !lr.letters_below_k.empty())
                throw CorruptRecord("witness lettering invalid or below multiplicity k");
            if (lr.letter_count != rec.value)
                throw CorruptRecord("witness does not attain the recorded value");
            if (contains(w->base, h))
                throw CorruptRecord("witness contains the forbidden hypergraph");
            break;
        }
        case RecordKind::ex_matrix: {
            const auto* w = std::get_if<Matrix01>(&rec.witness);
            if (!w) throw CorruptRecord("matrix record without matrix witness");
            Matrix01 q = Matrix01::from_text(forbidden_text);
            if (w->dim() != rec.d || !w->is_square() ||
                (w->dim() > 0 && w->dims()[0] != rec.n))
                throw CorruptRecord("witness shape mismatch");
            if (static_cast<long long>(w->ones_count()) != rec.value)
                throw CorruptRecord("witness does not attain the recorded value");
            if (mat_contains(*w, q)) throw CorruptRecord("witness contains the forbidden pattern");
            break;
        }
    }
}

std::string witness_text(const ExtremalRecord& rec) {
    if (const auto* h = std::get_if<Hypergraph>(&rec.witness)) return h->to_text();
    if (const auto* l = std::get_if<LetteredHypergraph>(&rec.witness)) return l->to_text();
    if (const auto* m = std::get_if<Matrix01>(&rec.witness)) return m->to_text();
    return {};
}

std::string serialize_body(const ExtremalRecord& rec, const std::string& forbidden_text) {
    std::ostringstream os;
    os << kMagic << '\n';
    os << "kind " << record_kind_name(rec.kind) << '\n';
    os << "n " << rec.n << '\n';
    os << "d " << rec.d << '\n';
    os << "k " << rec.k << '\n';
    os << "value " << rec.value << '\n';
    os << "exact " << (rec.exact ? 1 : 0) << '\n';
    std::string w = witness_text(rec);
    os << "forbidden-bytes " << forbidden_text.size() << '\n' << forbidden_text;
    os << "witness-bytes " << w.size() << '\n' << w;
    return os.str();
}

std::string read_counted(std::istream& is, const char* tag) {
    std::string key;
    std::size_t count = 0;
    if (!(is >> key >> count) || key != tag) throw CorruptRecord(std::string("missing ") + tag);
    is.get();  // newline after the count
    std::string blob(count, '\0');
    is.read(blob.data(), static_cast<std::streamsize>(count));
    if (static_cast<std::size_t>(is.gcount()) != count)
        throw CorruptRecord(std::string("truncated ") + tag);
    return blob;
}

}  // namespace

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

std::string ResultCache::param_digest(RecordKind kind, int n, int d, int k,
                                      const std::string& forbidden_text) {
    std::ostringstream os;
    os << record_kind_name(kind) << '|' << n << '|' << d << '|' << k << '|' << forbidden_text;
    return fnv1a64_hex(os.str());
}

std::filesystem::path ResultCache::record_path(RecordKind kind, int n, int d, int k,
                                               const std::string& forbidden_text) const {
    return dir_ / (std::string(record_kind_name(kind)) + "-" +
                   param_digest(kind, n, d, k, forbidden_text) + ".rec");
}

void ResultCache::store(const ExtremalRecord& rec, const std::string& forbidden_text) const {
    verify_record(rec, forbidden_text);
    std::string body = serialize_body(rec, forbidden_text);
    std::string full = body + "checksum " + fnv1a64_hex(body) + "\n";
    auto path = record_path(rec.kind, rec.n, rec.d, rec.k, forbidden_text);
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw Error("cache: cannot write " + tmp.string());
        os << full;
    }
    std::filesystem::rename(tmp, path);
}

std::optional<ExtremalRecord> ResultCache::load(RecordKind kind, int n, int d, int k,
                                                const std::string& forbidden_text) const {
    auto path = record_path(kind, n, d, k, forbidden_text);
    std::ifstream is(path, std::ios::binary);
    if (!is) return std::nullopt;
    std::stringstream ss;
    ss << is.rdbuf();
    std::string full = ss.str();

    auto pos = full.rfind("checksum ");
    if (pos == std::string::npos) throw CorruptRecord("cache record missing checksum");
    std::string body = full.substr(0, pos);
    std::string check_line = full.substr(pos);
    std::string expect = "checksum " + fnv1a64_hex(body) + "\n";
    if (check_line != expect) throw CorruptRecord("cache record checksum mismatch");

    std::istringstream bs(body);
    std::string magic;
    std::getline(bs, magic);
    if (magic != kMagic) throw CorruptRecord("cache record bad magic");

    ExtremalRecord rec;
    std::string key, kind_name;
    long long vn = 0, vd = 0, vk = 0, value = 0, exact = 0;
    if (!(bs >> key >> kind_name) || key != "kind") throw CorruptRecord("cache record: kind");
    rec.kind = record_kind_from_name(kind_name);
    if (!(bs >> key >> vn) || key != "n") throw CorruptRecord("cache record: n");
    if (!(bs >> key >> vd) || key != "d") throw CorruptRecord("cache record: d");
    if (!(bs >> key >> vk) || key != "k") throw CorruptRecord("cache record: k");
    if (!(bs >> key >> value) || key != "value") throw CorruptRecord("cache record: value");
    if (!(bs >> key >> exact) || key != "exact") throw CorruptRecord("cache record: exact");
    rec.n = static_cast<int>(vn);
    rec.d = static_cast<int>(vd);
    rec.k = static_cast<int>(vk);
    rec.value = value;
    rec.exact = exact != 0;

    std::string stored_forbidden = read_counted(bs, "forbidden-bytes");
    std::string stored_witness = read_counted(bs, "witness-bytes");
    if (rec.kind != kind || rec.n != n || rec.d != d || rec.k != k ||
        stored_forbidden != forbidden_text)
        throw CorruptRecord("cache record: parameter echo mismatch");
    rec.forbidden_digest = fnv1a64_hex(forbidden_text);

    try {
        switch (rec.kind) {
            case RecordKind::ex_hypergraph:
                rec.witness = Hypergraph::from_text(stored_witness);
                break;
            case RecordKind::f_lettered:
                rec.witness = LetteredHypergraph::from_text(stored_witness);
                break;
            case RecordKind::ex_matrix:
                rec.witness = Matrix01::from_text(stored_witness);
                break;
        }
        verify_record(rec, forbidden_text);
    } catch (const ParseError& e) {
        throw CorruptRecord(e.what());
    }
    return rec;
}

ExtremalRecord ex_exact_cached(const ResultCache* cache, int n, const Hypergraph& h,
                               const SearchBudget& budget) {
    if (cache)
        if (auto hit = cache->load(RecordKind::ex_hypergraph, n, h.uniformity(), 0, h.to_text()))
            return *hit;
    auto rec = ex_exact(n, h, budget);
    if (cache && rec.exact) cache->store(rec, h.to_text());
    return rec;
}

ExtremalRecord f_exact_cached(const ResultCache* cache, int n, int k, const Hypergraph& h,
                              const SearchBudget& budget) {
    if (cache)
        if (auto hit = cache->load(RecordKind::f_lettered, n, h.uniformity(), k, h.to_text()))
            return *hit;
    auto rec = f_exact(n, k, h, budget);
    if (cache && rec.exact) cache->store(rec, h.to_text());
    return rec;
}

ExtremalRecord mat_ex_exact_cached(const ResultCache* cache, int n, const Matrix01& q,
                                   const SearchBudget& budget) {
    if (cache)
        if (auto hit = cache->load(RecordKind::ex_matrix, n, q.dim(), 0, q.to_text()))
            return *hit;
    auto rec = mat_ex_exact(n, q, budget);
    if (cache && rec.exact) cache->store(rec, q.to_text());
    return rec;
}

}  // namespace turan
