#include "rns/atlas.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include "rns/irreducible.hpp"

namespace rns {

namespace {

constexpr const char* kHeader =
    "# rns atlas v1\n"
    "# n\th_coeffs\tnum_irreducible\tcompute_seconds\n";

void validate_entry(const AtlasEntry& e, int line) {
    if (e.n < 1) throw AtlasError(line, "n must be >= 1");
    if (e.h_coeffs.empty() || e.h_coeffs.front() != 1) {
        throw AtlasError(line, "h_0 must equal 1");
    }
    std::int64_t sum = 0;
    for (std::int64_t c : e.h_coeffs) {
        if (c < 0) throw AtlasError(line, "negative h coefficient");
        sum += c;
    }
    if (sum != e.num_irreducible) {
        throw AtlasError(line, "h coefficients do not sum to the irreducible count");
    }
    const int want_deg = (e.n == 1) ? 0 : dn_formula(e.n);
    if (static_cast<int>(e.h_coeffs.size()) - 1 != want_deg) {
        throw AtlasError(line, "h degree disagrees with floor((n-1)/2) - floor(n/3)");
    }
    if (e.compute_seconds < 0) throw AtlasError(line, "negative compute time");
}

AtlasEntry parse_line(const std::string& line, int line_no) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream is(line);
    while (std::getline(is, field, '\t')) fields.push_back(field);
    if (fields.size() != 4) throw AtlasError(line_no, "expected 4 tab-separated fields");
    AtlasEntry e;
    try {
        e.n = std::stoi(fields[0]);
        std::istringstream cs(fields[1]);
        std::string tok;
        while (std::getline(cs, tok, ',')) e.h_coeffs.push_back(std::stoll(tok));
        e.num_irreducible = std::stoll(fields[2]);
        e.compute_seconds = std::stod(fields[3]);
    } catch (const std::exception&) {
        throw AtlasError(line_no, "malformed field");
    }
    validate_entry(e, line_no);
    return e;
}

std::string format_entry(const AtlasEntry& e) {
    std::ostringstream os;
    os << e.n << '\t';
    for (std::size_t i = 0; i < e.h_coeffs.size(); ++i) {
        if (i) os << ',';
        os << e.h_coeffs[i];
    }
    os << '\t' << e.num_irreducible << '\t';
    os.precision(6);
    os << e.compute_seconds << '\n';
    return os.str();
}

}  // namespace

AtlasError::AtlasError(int line, const std::string& message)
    : std::runtime_error("atlas line " + std::to_string(line) + ": " + message), line_(line) {}

Atlas Atlas::load(const std::filesystem::path& path) {
    Atlas atlas;
    std::ifstream in(path);
    if (!in) return atlas;  // missing file: empty atlas
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        AtlasEntry e = parse_line(line, line_no);
        if (atlas.entries_.count(e.n)) throw AtlasError(line_no, "duplicate entry for n");
        atlas.entries_.emplace(e.n, std::move(e));
    }
    return atlas;
}

const AtlasEntry* Atlas::find(int n) const {
    auto it = entries_.find(n);
    return it == entries_.end() ? nullptr : &it->second;
}

int Atlas::max_contiguous_n() const {
    int n = 0;
    while (entries_.count(n + 1)) ++n;
    return n;
}

HTable Atlas::h_table(int max_n) const {
    const int k = std::min(max_n, max_contiguous_n());
    HTable out;
    out.reserve(static_cast<std::size_t>(std::max(k, 0)));
    for (int n = 1; n <= k; ++n) {
        const AtlasEntry& e = entries_.at(n);
        HPolynomial h;
        h.n = n;
        h.coeffs = e.h_coeffs;
        out.push_back(std::move(h));
    }
    return out;
}

void Atlas::insert(AtlasEntry entry) {
    validate_entry(entry, 0);
    if (entries_.count(entry.n)) throw AtlasError(0, "duplicate entry for n");
    entries_.emplace(entry.n, std::move(entry));
}

AtlasBuildResult atlas_build(const std::filesystem::path& path, int max_n, int jobs) {
    if (max_n < 2) throw std::invalid_argument("atlas_build: max_n must be >= 2");
    if (jobs < 1) throw std::invalid_argument("atlas_build: jobs must be >= 1");

    Atlas existing = Atlas::load(path);
    std::vector<int> missing;
    for (int n = 1; n <= max_n; ++n) {
        if (existing.find(n) == nullptr) missing.push_back(n);
    }

    std::vector<AtlasEntry> fresh(missing.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= missing.size()) return;
            const int n = missing[i];
            const auto t0 = std::chrono::steady_clock::now();
            std::vector<std::int64_t> tally = kernel_size_tally(n);
            while (tally.size() > 1 && tally.back() == 0) tally.pop_back();
            const auto t1 = std::chrono::steady_clock::now();
            AtlasEntry e;
            e.n = n;
            e.h_coeffs = std::move(tally);
            for (std::int64_t c : e.h_coeffs) e.num_irreducible += c;
            e.compute_seconds = std::chrono::duration<double>(t1 - t0).count();
            fresh[i] = std::move(e);
        }
    };
    const int threads = std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(missing.size(), 1)));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    if (!fresh.empty()) {
        const bool fresh_file = !std::filesystem::exists(path);
        std::ofstream out(path, std::ios::app);
        if (!out) throw std::runtime_error("atlas_build: cannot open " + path.string());
        if (fresh_file) out << kHeader;
        for (const auto& e : fresh) out << format_entry(e);  // ascending n
    }

    AtlasBuildResult result;
    result.appended = static_cast<int>(fresh.size());
    result.max_n = max_n;
    return result;
}

}  // namespace rns
