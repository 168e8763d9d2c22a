#include "padicok/module_types.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace padicok {

ModuleType::ModuleType(const std::vector<int>& parts) {
    for (int r : parts) {
        if (r == kInf) ++free_count;
        else if (r >= 1) ++finite[r];
        else throw std::invalid_argument("ModuleType: exponents must be >= 1 or inf");
    }
}

ModuleType ModuleType::parse(const std::string& text) {
    ModuleType h;
    std::string t;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty() || t == "0") return h;
    std::istringstream is(t);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok == "inf") { ++h.free_count; continue; }
        int r;
        try {
            r = std::stoi(tok);
        } catch (const std::exception&) {
            throw std::invalid_argument("ModuleType: bad token '" + tok + "'");
        }
        if (r < 1) throw std::invalid_argument("ModuleType: exponents must be >= 1 or inf");
        ++h.finite[r];
    }
    return h;
}

std::string ModuleType::str() const {
    if (trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto [r, c] : finite)
        for (int i = 0; i < c; ++i) {
            if (!first) os << ',';
            os << r;
            first = false;
        }
    for (int i = 0; i < free_count; ++i) {
        if (!first) os << ',';
        os << "inf";
        first = false;
    }
    return os.str();
}

int ModuleType::s_rank() const {
    int s = free_count;
    for (auto [r, c] : finite) s += c;
    return s;
}

int ModuleType::d(int r) const {
    auto it = finite.find(r);
    return it == finite.end() ? 0 : it->second;
}

int ModuleType::max_finite_exp() const {
    return finite.empty() ? 0 : finite.rbegin()->first;
}

std::vector<int> ModuleType::parts() const {
    std::vector<int> r;
    for (auto [e, c] : finite)
        for (int i = 0; i < c; ++i) r.push_back(e);
    for (int i = 0; i < free_count; ++i) r.push_back(kInf);
    return r;
}

CokType ModuleType::truncate(int k) const {
    if (k < 1) throw std::invalid_argument("ModuleType: truncation level must be >= 1");
    CokType t;
    t.K = k;
    for (auto [r, c] : finite)
        for (int i = 0; i < c; ++i) t.exps.push_back(std::min(r, k));
    for (int i = 0; i < free_count; ++i) t.exps.push_back(k);
    std::sort(t.exps.begin(), t.exps.end());
    return t;
}

ModuleType ModuleType::shifted_down() const {
    ModuleType r;
    r.free_count = free_count;
    for (auto [e, c] : finite)
        if (e >= 2) r.finite[e - 1] = c;
    return r;
}

ModuleType ModuleType::shifted_up(int new_ones) const {
    ModuleType r;
    r.free_count = free_count;
    for (auto [e, c] : finite) r.finite[e + 1] = c;
    if (new_ones > 0) r.finite[1] += new_ones;
    return r;
}

ModuleType ModuleType::operator+(const ModuleType& o) const {
    ModuleType r = *this;
    r.free_count += o.free_count;
    for (auto [e, c] : o.finite) r.finite[e] += c;
    return r;
}

void TupleSpec::validate() const {
    if (!is_prime_u64(p)) throw std::invalid_argument("TupleSpec: p must be prime");
    if (xs.size() != targets.size()) throw std::invalid_argument("TupleSpec: |x| != number of targets");
    if (targets.empty()) throw std::invalid_argument("TupleSpec: empty tuple");
    XSet check(Modulus(p, 1), xs);  // validates distinct residues, forces m <= p
    if (n) {
        for (const auto& h : targets)
            if (*n < h.s_rank()) throw std::invalid_argument("TupleSpec: n smaller than s(H_i)");
    }
}

TupleSpec TupleSpec::load(std::istream& in) {
    TupleSpec spec;
    std::map<int, ModuleType> hs;
    std::string line;
    int lineno = 0;
    bool saw_p = false, saw_x = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto fail = [&](const std::string& msg) {
            throw std::invalid_argument("tuple spec line " + std::to_string(lineno) + ": " + msg);
        };
        std::string t;
        for (char c : line)
            if (!isspace(static_cast<unsigned char>(c))) t += c;
        if (t.empty() || t[0] == '#') continue;
        auto eq = t.find('=');
        if (eq == std::string::npos) fail("expected key=value");
        std::string key = t.substr(0, eq), val = t.substr(eq + 1);
        try {
            if (key == "p") { spec.p = std::stoull(val); saw_p = true; }
            else if (key == "n") spec.n = std::stoi(val);
            else if (key == "x") {
                std::istringstream xs(val);
                std::string tok;
                while (std::getline(xs, tok, ',')) spec.xs.push_back(std::stoll(tok));
                saw_x = true;
            } else if (key.size() > 1 && key[0] == 'H') {
                int idx = std::stoi(key.substr(1));
                if (idx < 1) fail("bad target index");
                if (hs.count(idx)) fail("duplicate " + key);
                hs[idx] = ModuleType::parse(val);
            } else fail("unknown key '" + key + "'");
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            fail("bad value '" + val + "'");
        }
    }
    if (!saw_p) throw std::invalid_argument("tuple spec: missing p=");
    if (!saw_x) throw std::invalid_argument("tuple spec: missing x=");
    for (int i = 1; i <= static_cast<int>(hs.size()); ++i) {
        auto it = hs.find(i);
        if (it == hs.end()) throw std::invalid_argument("tuple spec: targets must be H1..Hm without gaps");
        spec.targets.push_back(it->second);
    }
    spec.validate();
    return spec;
}

TupleSpec TupleSpec::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("tuple spec: cannot open '" + path + "'");
    return load(in);
}

std::string TupleSpec::save() const {
    std::ostringstream os;
    os << "p=" << p << "\n";
    if (n) os << "n=" << *n << "\n";
    os << "x=";
    for (size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
    os << "\n";
    for (size_t i = 0; i < targets.size(); ++i) os << "H" << (i + 1) << "=" << targets[i].str() << "\n";
    return os.str();
}

Presentation Presentation::of(const std::vector<ModuleType>& targets, int n, int k) {
    Presentation pr;
    pr.k = k;
    for (const auto& h : targets) {
        if (h.s_rank() > n) throw std::invalid_argument("Presentation: n smaller than s(H_i)");
        std::vector<int> row(static_cast<size_t>(n - h.s_rank()), 0);
        for (auto [r, c] : h.finite)
            for (int i = 0; i < c; ++i) row.push_back(std::min(r, k));
        for (int i = 0; i < h.free_count; ++i) row.push_back(k);
        std::sort(row.begin(), row.end());
        pr.grid.push_back(std::move(row));
    }
    return pr;
}

Presentation Presentation::concat(const Presentation& o) const {
    if (k != o.k || m() != o.m()) throw std::invalid_argument("Presentation: concat shape mismatch");
    Presentation r = *this;
    for (int i = 0; i < m(); ++i)
        r.grid[static_cast<size_t>(i)].insert(r.grid[static_cast<size_t>(i)].end(),
                                              o.grid[static_cast<size_t>(i)].begin(),
                                              o.grid[static_cast<size_t>(i)].end());
    return r;
}

Presentation Presentation::row_sorted() const {
    Presentation r = *this;
    for (auto& row : r.grid) std::sort(row.begin(), row.end());
    return r;
}

bool Presentation::same_rows(const Presentation& o) const {
    return k == o.k && row_sorted().grid == o.row_sorted().grid;
}

}  // namespace padicok
