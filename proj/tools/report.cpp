#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qst::cli {

namespace {

void upsert(std::vector<std::pair<std::string, Cell>>& kv, const std::string& key, Cell value) {
    for (auto& [k, v] : kv) {
        if (k == key) {
            v = std::move(value);
            return;
        }
    }
    kv.emplace_back(key, std::move(value));
}

} // namespace

void Report::add_row(std::vector<Cell> row) {
    if (row.size() != columns_.size()) {
        throw std::logic_error("row width does not match header");
    }
    rows_.push_back(std::move(row));
}

void Report::set_config(const std::string& key, Cell value) { upsert(config_, key, std::move(value)); }

void Report::set_summary(const std::string& key, Cell value) { upsert(summary_, key, std::move(value)); }

const Cell* Report::summary(const std::string& key) const {
    for (const auto& [k, v] : summary_) {
        if (k == key) {
            return &v;
        }
    }
    return nullptr;
}

std::string format_real(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_cell(const Cell& c) {
    struct Visitor {
        std::string operator()(std::monostate) const { return {}; }
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(double v) const { return format_real(v); }
        std::string operator()(const std::string& v) const { return v; }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
    };
    return std::visit(Visitor{}, c);
}

nlohmann::ordered_json to_json(const Cell& c) {
    struct Visitor {
        nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
        nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
        nlohmann::ordered_json operator()(double v) const {
            if (std::isfinite(v)) {
                return v;
            }
            return format_real(v); // JSON has no literal for these
        }
        nlohmann::ordered_json operator()(const std::string& v) const { return v; }
        nlohmann::ordered_json operator()(bool v) const { return v; }
    };
    return std::visit(Visitor{}, c);
}

void Report::write_csv(std::ostream& os) const {
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        os << (i ? "," : "") << columns_[i];
    }
    os << '\n';
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << (i ? "," : "") << format_cell(row[i]);
        }
        os << '\n';
    }
    for (const auto& [k, v] : summary_) {
        os << "# " << k << '=' << format_cell(v) << '\n';
    }
}

void Report::write_json(std::ostream& os) const {
    nlohmann::ordered_json doc;
    auto& config = doc["config"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : config_) {
        config[k] = to_json(v);
    }
    auto& rows = doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : rows_) {
        nlohmann::ordered_json r = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            r[columns_[i]] = to_json(row[i]);
        }
        rows.push_back(std::move(r));
    }
    auto& summary = doc["summary"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : summary_) {
        summary[k] = to_json(v);
    }
    os << doc.dump(2) << '\n';
}

} // namespace qst::cli
