#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace costcut {

enum class ColumnKind { continuous, ordinal, categorical, binary };

const char* to_string(ColumnKind kind);
ColumnKind column_kind_from_string(const std::string& text);

struct ColumnSpec {
    std::string name;
    ColumnKind kind = ColumnKind::continuous;

    bool operator==(const ColumnSpec&) const = default;
};

// One column of values. Numeric kinds fill `numeric`; categorical columns
// keep their raw string levels in `labels`.
struct Column {
    ColumnSpec spec;
    std::vector<double> numeric;
    std::vector<std::string> labels;

    std::size_t size() const {
        return spec.kind == ColumnKind::categorical ? labels.size() : numeric.size();
    }

    bool operator==(const Column&) const = default;
};

// Immutable typed table with one designated binary outcome column.
class Dataset {
public:
    Dataset(std::vector<Column> columns, std::size_t outcome_index);

    std::size_t n_rows() const { return n_rows_; }
    std::size_t n_columns() const { return columns_.size(); }
    const std::vector<Column>& columns() const { return columns_; }
    const Column& column(std::size_t index) const { return columns_.at(index); }
    const Column& column(const std::string& name) const;
    const Column* find_column(const std::string& name) const;

    std::size_t outcome_index() const { return outcome_index_; }
    const Column& outcome() const { return columns_[outcome_index_]; }
    std::vector<int> outcome_labels() const;
    double prevalence() const;

    std::vector<ColumnSpec> schema() const;

    // New dataset holding the given rows, in the given order.
    Dataset subset(const std::vector<std::size_t>& rows) const;

    bool operator==(const Dataset&) const = default;

private:
    std::vector<Column> columns_;
    std::size_t outcome_index_ = 0;
    std::size_t n_rows_ = 0;
};

struct SplitSpec {
    double train_fraction = 0.5; // strictly inside (0, 1)
    std::uint64_t seed = 0;
};

using SchemaHints = std::map<std::string, ColumnKind>;

// Delimited text with a header row; '#' lines are skipped. Column kinds are
// inferred unless hinted: binary if all values are 0/1, ordinal if
// integer-valued with at most 20 distinct values, continuous otherwise;
// any non-numeric token makes the column categorical. Rows with empty cells
// are rejected. The outcome column must hold exactly 0 or 1.
Dataset load_table(std::istream& in, const std::string& outcome_name,
                   const SchemaHints& hints = {}, char delimiter = ',');
Dataset load_table_file(const std::string& path, const std::string& outcome_name,
                        const SchemaHints& hints = {}, char delimiter = ',');

void write_table(std::ostream& out, const Dataset& data, char delimiter = ',');
void write_table_file(const std::string& path, const Dataset& data, char delimiter = ',');

// Seed-deterministic disjoint partition into (train, test). The train side
// gets round(train_fraction * n) rows, clamped so both sides stay nonempty.
std::pair<Dataset, Dataset> split(const Dataset& data, const SplitSpec& spec);

// Synthetic rare-event generator. Features are drawn per row from fixed
// distributions by kind (continuous: uniform on [0,1); ordinal: uniform on
// the integer grid 0..9; binary: fair coin), then the outcome is Bernoulli
// with probability inverse-logit(intercept + sum coef_i * x_i).
// `coefficients` holds the intercept first, then one slope per feature.
Dataset synth_rare_event(std::size_t n, const std::vector<double>& coefficients,
                         const std::vector<ColumnSpec>& features, std::uint64_t seed,
                         const std::string& outcome_name = "y");

} // namespace costcut
