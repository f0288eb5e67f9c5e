#pragma once

#include <cstddef>
#include <vector>

#include "rfs/design.hpp"
#include "rfs/response.hpp"

namespace rfs {

enum class Split { train, validation };

// One labeled example: a geometry, the frequency subset actually simulated,
// and the dB response restricted to that subset.
struct Record {
  DesignPoint point;
  std::vector<std::size_t> freq_indices;  // into the owning dense grid
  DbResponse response;                    // grid == dense grid subset
  Split split = Split::train;
};

class Dataset {
 public:
  Dataset() = default;

  // Rejects duplicate (point, frequency index) pairs among train records.
  void add(Record record);

  const std::vector<Record>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }

  std::size_t labeled_cell_count(Split split) const;
  std::vector<const Record*> split_records(Split split) const;

  bool train_cell_exists(const DesignPoint& point,
                         std::size_t freq_index) const;

 private:
  std::vector<Record> records_;
};

}  // namespace rfs
