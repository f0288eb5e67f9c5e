#include "rfs/dataset.hpp"

#include "rfs/errors.hpp"

namespace rfs {

void Dataset::add(Record record) {
  if (record.freq_indices.size() != record.response.grid().count())
    throw ShapeError("record frequency subset does not match its response");
  if (record.split == Split::train) {
    for (std::size_t idx : record.freq_indices) {
      if (train_cell_exists(record.point, idx))
        throw ShapeError("duplicate (design point, frequency) train cell");
    }
  }
  records_.push_back(std::move(record));
}

std::size_t Dataset::labeled_cell_count(Split split) const {
  std::size_t n = 0;
  for (const Record& r : records_)
    if (r.split == split) n += r.freq_indices.size();
  return n;
}

std::vector<const Record*> Dataset::split_records(Split split) const {
  std::vector<const Record*> out;
  for (const Record& r : records_)
    if (r.split == split) out.push_back(&r);
  return out;
}

bool Dataset::train_cell_exists(const DesignPoint& point,
                                std::size_t freq_index) const {
  for (const Record& r : records_) {
    if (r.split != Split::train || !(r.point == point)) continue;
    for (std::size_t idx : r.freq_indices)
      if (idx == freq_index) return true;
  }
  return false;
}

}  // namespace rfs
