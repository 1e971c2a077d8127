#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "eebandit/experiment.hpp"

namespace eebandit::harness {

std::string format_number(double value)
{
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

void sort_rows(std::vector<AggregateRow>& rows)
{
    std::stable_sort(rows.begin(), rows.end(), [](const AggregateRow& a, const AggregateRow& b) {
        return std::tie(a.scheme, a.k, a.r0, a.csi_cost_dbm, a.slot) <
               std::tie(b.scheme, b.k, b.r0, b.csi_cost_dbm, b.slot);
    });
}

std::string aggregate_csv(std::span<const AggregateRow> rows)
{
    std::ostringstream out;
    out << "scheme,k,r0,csi_cost_dbm,slot,ee_mean,ee_se,regret_mean,thm1_bound\n";
    for (const AggregateRow& r : rows) {
        out << r.scheme << ',' << r.k << ',' << format_number(r.r0) << ','
            << (r.csi_cost_dbm ? format_number(*r.csi_cost_dbm) : std::string()) << ',' << r.slot
            << ',' << format_number(r.ee_mean) << ',' << format_number(r.ee_se) << ','
            << format_number(r.regret_mean) << ',' << format_number(r.thm1_bound) << '\n';
    }
    return out.str();
}

std::optional<double> find_crossover(std::span<const double> costs_dbm,
                                     std::span<const double> csi_ee, double learner_ee)
{
    if (costs_dbm.size() != csi_ee.size() || costs_dbm.empty()) {
        return std::nullopt;
    }
    double prev = csi_ee[0] - learner_ee;
    if (prev <= 0.0) {
        return std::nullopt;
    }
    for (std::size_t i = 1; i < costs_dbm.size(); ++i) {
        const double diff = csi_ee[i] - learner_ee;
        if (diff <= 0.0) {
            return costs_dbm[i - 1] + (costs_dbm[i] - costs_dbm[i - 1]) * prev / (prev - diff);
        }
        prev = diff;
    }
    return std::nullopt;
}

namespace {

using CellKey = std::tuple<std::string, std::size_t, double, std::optional<double>>;

std::map<CellKey, AggregateRow> final_rows(std::span<const AggregateRow> rows)
{
    std::map<CellKey, AggregateRow> last;
    for (const AggregateRow& r : rows) {
        const CellKey key{r.scheme, r.k, r.r0, r.csi_cost_dbm};
        auto it = last.find(key);
        if (it == last.end() || it->second.slot < r.slot) {
            last[key] = r;
        }
    }
    return last;
}

const AggregateRow* lookup(const std::map<CellKey, AggregateRow>& rows, const std::string& scheme,
                           std::size_t k, double r0)
{
    const auto it = rows.find(CellKey{scheme, k, r0, std::nullopt});
    return it == rows.end() ? nullptr : &it->second;
}

} // namespace

std::string summarize(std::span<const AggregateRow> rows)
{
    if (rows.empty()) {
        return {};
    }
    const auto last = final_rows(rows);
    std::set<std::size_t> ks;
    std::set<double> r0s;
    std::set<std::string> schemes;
    bool has_csi = false;
    for (const auto& [key, row] : last) {
        ks.insert(row.k);
        r0s.insert(row.r0);
        if (row.csi_cost_dbm) {
            has_csi = true;
        } else {
            schemes.insert(row.scheme);
        }
    }

    std::ostringstream out;
    out << "final-horizon energy efficiency (bpcu/W)\n";
    for (std::size_t k : ks) {
        for (double r0 : r0s) {
            out << "  k=" << k << " r0=" << format_number(r0) << ':';
            for (const std::string& s : schemes) {
                if (const AggregateRow* row = lookup(last, s, k, r0)) {
                    out << ' ' << s << '=' << format_number(row->ee_mean) << " (se "
                        << format_number(row->ee_se) << ", slot " << row->slot << ')';
                }
            }
            out << '\n';
        }
    }

    if (r0s.size() > 1) {
        out << "rate sweep peaks\n";
        for (std::size_t k : ks) {
            std::map<std::string, std::pair<double, double>> peak;  // scheme -> (r0, ee)
            for (const auto& [key, row] : last) {
                if (row.k != k || row.csi_cost_dbm) {
                    continue;
                }
                auto it = peak.find(row.scheme);
                if (it == peak.end() || row.ee_mean > it->second.second) {
                    peak[row.scheme] = {row.r0, row.ee_mean};
                }
            }
            for (const auto& [scheme, p] : peak) {
                out << "  k=" << k << ' ' << scheme << " peaks at r0=" << format_number(p.first)
                    << " with EE " << format_number(p.second) << '\n';
            }
            if (const auto oracle_peak = peak.find("oracle"); oracle_peak != peak.end()) {
                const double r0 = oracle_peak->second.first;
                const AggregateRow* ucb = lookup(last, "ucb_eh", k, r0);
                const AggregateRow* orc = lookup(last, "oracle", k, r0);
                const AggregateRow* mx = lookup(last, "max_power", k, r0);
                if (ucb && orc && mx) {
                    out << "  at r0=" << format_number(r0)
                        << ": ucb_eh/max_power = " << format_number(ucb->ee_mean / mx->ee_mean)
                        << " (reference 1.52), ucb_eh/oracle = "
                        << format_number(ucb->ee_mean / orc->ee_mean) << " (reference 0.91)\n";
                }
            }
        }
    }

    if (has_csi) {
        out << "CSI cost sweep\n";
        for (std::size_t k : ks) {
            for (double r0 : r0s) {
                const AggregateRow* ucb = lookup(last, "ucb_eh", k, r0);
                std::vector<double> costs;
                std::vector<double> ee;
                for (const auto& [key, row] : last) {
                    if (row.k == k && row.r0 == r0 && row.scheme == "full_csi" && row.csi_cost_dbm) {
                        costs.push_back(*row.csi_cost_dbm);
                        ee.push_back(row.ee_mean);
                    }
                }
                if (!ucb || costs.empty()) {
                    continue;
                }
                out << "  k=" << k << " r0=" << format_number(r0)
                    << ": ucb_eh EE " << format_number(ucb->ee_mean) << '\n';
                for (std::size_t i = 0; i < costs.size(); ++i) {
                    out << "    cost " << format_number(costs[i]) << " dBm: full_csi EE "
                        << format_number(ee[i]) << '\n';
                }
                if (const auto c = find_crossover(costs, ee, ucb->ee_mean)) {
                    out << "    crossover cost c* = " << format_number(*c) << " dBm\n";
                } else {
                    out << "    no crossover within the scanned grid\n";
                }
            }
        }
    }
    return out.str();
}

} // namespace eebandit::harness
