#include "stackcoh/modring.hpp"

#include <stdexcept>
#include <unordered_map>

namespace gcoh {

namespace {

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t q) {
    // extended Euclid; a must be a unit mod q
    long long t = 0, newt = 1;
    long long r = static_cast<long long>(q), newr = static_cast<long long>(a % q);
    while (newr != 0) {
        long long quot = r / newr;
        t -= quot * newt;
        std::swap(t, newt);
        r -= quot * newr;
        std::swap(r, newr);
    }
    if (r != 1) throw std::logic_error("inverse of a non-unit");
    long long m = static_cast<long long>(q);
    return static_cast<std::uint64_t>(((t % m) + m) % m);
}

int val_p(std::uint64_t x, std::uint64_t p) {
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

// a -= f * b (mod q), two-pointer merge of sorted sparse rows.
ModRow merge_sub(const ModRow& a, std::uint64_t f, const ModRow& b, std::uint64_t q) {
    ModRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            std::uint64_t v = (q - (f * b[j].second) % q) % q;
            if (v) out.emplace_back(b[j].first, v);
            ++j;
        } else {
            std::uint64_t v = (a[i].second + q - (f * b[j].second) % q) % q;
            if (v) out.emplace_back(a[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

ModRow scale(const ModRow& a, std::uint64_t c, std::uint64_t q) {
    ModRow out;
    out.reserve(a.size());
    for (const auto& [i, v] : a) {
        std::uint64_t w = (v * c) % q;
        if (w) out.emplace_back(i, w);
    }
    return out;
}

struct Work {
    ModRow row, tag;
};

}  // namespace

HowellResult howell_process(std::uint64_t q, std::uint64_t p, int e,
                            std::vector<ModRow> rows, bool track_kernel) {
    if (q >= (1ull << 31)) throw std::invalid_argument("modulus too large for the mod-q engine");

    std::vector<Work> pivots;                       // stored pivot rows
    std::unordered_map<std::uint32_t, std::size_t> pivot_at;  // leading column -> index
    std::vector<Work> queue;
    HowellResult res;

    auto enqueue_shadow = [&](const Work& w, int s) {
        if (s == 0 || s >= e) return;
        std::uint64_t shift = 1;
        for (int i = 0; i < e - s; ++i) shift *= p;
        Work sh{scale(w.row, shift, q), scale(w.tag, shift, q)};
        if (!sh.row.empty() || !sh.tag.empty()) queue.push_back(std::move(sh));
    };

    for (std::size_t i = 0; i < rows.size(); ++i) {
        Work w{std::move(rows[i]), {}};
        if (track_kernel) w.tag = {{static_cast<std::uint32_t>(i), 1}};
        queue.push_back(std::move(w));

        while (!queue.empty()) {
            Work cur = std::move(queue.back());
            queue.pop_back();
            for (;;) {
                if (cur.row.empty()) {
                    if (track_kernel && !cur.tag.empty()) res.kernel.push_back(std::move(cur.tag));
                    break;
                }
                std::uint32_t c = cur.row.front().first;
                std::uint64_t lead = cur.row.front().second;
                int s = val_p(lead, p);
                auto it = pivot_at.find(c);
                if (it == pivot_at.end()) {
                    pivot_at.emplace(c, pivots.size());
                    enqueue_shadow(cur, s);
                    pivots.push_back(std::move(cur));
                    break;
                }
                Work& pv = pivots[it->second];
                std::uint64_t plead = pv.row.front().second;
                int ps = val_p(plead, p);
                if (ps <= s) {
                    // eliminate: cur.lead = f * pv.lead (mod q)
                    std::uint64_t pspow = 1, pu = plead;
                    for (int k = 0; k < ps; ++k) {
                        pspow *= p;
                        pu /= p;
                    }
                    std::uint64_t f = ((lead / pspow) * inv_mod(pu, q)) % q;
                    cur.row = merge_sub(cur.row, f, pv.row, q);
                    cur.tag = merge_sub(cur.tag, f, pv.tag, q);
                } else {
                    // cur is the better pivot; displaced row continues
                    std::swap(cur, pv);
                    enqueue_shadow(pv, s);
                }
            }
        }
    }

    res.pivots = 0;
    res.log_size = 0;
    for (auto& [c, idx] : pivot_at) {
        (void)c;
        ++res.pivots;
        int s = val_p(pivots[idx].row.front().second, p);
        res.log_size += (e - s);
    }
    return res;
}

StreamRankModP::StreamRankModP(std::uint64_t p, std::size_t cols)
    : p_(p), cols_(cols), pivot_(cols), inv_(p, 0), scratch_(cols, 0) {
    if (p >= 256) throw std::invalid_argument("StreamRankModP needs p < 256");
    for (std::uint64_t a = 1; a < p; ++a) inv_[a] = static_cast<std::uint8_t>(inv_mod(a, p));
}

std::size_t StreamRankModP::add_row(const std::vector<std::pair<std::uint32_t, long>>& row) {
    heap_.clear();
    touched_.clear();
    auto push = [&](std::uint32_t c) {
        heap_.push_back(c);
        std::push_heap(heap_.begin(), heap_.end(), std::greater<>());
    };
    for (const auto& [c, v] : row) {
        long red = v % static_cast<long>(p_);
        if (red < 0) red += static_cast<long>(p_);
        if (!scratch_[c] && red) {
            touched_.push_back(c);
            push(c);
        }
        scratch_[c] = static_cast<std::uint8_t>((scratch_[c] + red) % p_);
    }
    while (!heap_.empty()) {
        std::pop_heap(heap_.begin(), heap_.end(), std::greater<>());
        std::uint32_t c = heap_.back();
        heap_.pop_back();
        while (!heap_.empty() && heap_.front() == c) {
            std::pop_heap(heap_.begin(), heap_.end(), std::greater<>());
            heap_.pop_back();
        }
        std::uint8_t f = scratch_[c];
        if (!f) continue;
        if (pivot_[c].empty()) {
            // register a new pivot: drain the remaining candidates into a
            // sorted sparse row, normalized to leading coefficient 1
            std::vector<std::pair<std::uint32_t, std::uint8_t>> piv;
            piv.emplace_back(c, 1);
            scratch_[c] = f;  // keep for normalization below
            std::sort(heap_.begin(), heap_.end());
            std::uint32_t s = inv_[f];
            std::uint32_t prev = c;
            for (std::uint32_t cc : heap_) {
                if (cc == prev) continue;
                prev = cc;
                if (scratch_[cc])
                    piv.emplace_back(cc, static_cast<std::uint8_t>((scratch_[cc] * s) % p_));
            }
            heap_.clear();
            pivot_[c] = std::move(piv);
            ++rank_;
            break;
        }
        const auto& piv = pivot_[c];
        std::uint32_t m = static_cast<std::uint32_t>(p_) - f;
        scratch_[c] = 0;
        for (std::size_t i = 1; i < piv.size(); ++i) {
            std::uint32_t cc = piv[i].first;
            std::uint32_t add = (m * piv[i].second) % p_;
            if (!add) continue;
            if (!scratch_[cc]) {
                touched_.push_back(cc);
                push(cc);
            }
            scratch_[cc] = static_cast<std::uint8_t>((scratch_[cc] + add) % p_);
        }
    }
    for (std::uint32_t c : touched_) scratch_[c] = 0;
    return rank_;
}

std::size_t rank_mod_p(std::uint64_t p,
                       const std::vector<std::vector<std::pair<std::uint32_t, long>>>& rows) {
    std::vector<ModRow> mrows;
    mrows.reserve(rows.size());
    for (const auto& r : rows) {
        ModRow m;
        for (const auto& [c, v] : r) {
            long red = v % static_cast<long>(p);
            if (red < 0) red += static_cast<long>(p);
            if (red) m.emplace_back(c, static_cast<std::uint64_t>(red));
        }
        if (!m.empty()) mrows.push_back(std::move(m));
    }
    return howell_process(p, p, 1, std::move(mrows), false).pivots;
}

}  // namespace gcoh
