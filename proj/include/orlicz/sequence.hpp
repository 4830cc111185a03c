#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace orlicz {

/// A real sequence truncated at dimension d = size(); entries past d are zero.
/// Positions are 0-based in code; the CLI reports them 1-based.
class FiniteSequence {
 public:
  FiniteSequence() = default;
  explicit FiniteSequence(std::vector<double> entries) : entries_(std::move(entries)) {}
  FiniteSequence(std::initializer_list<double> entries) : entries_(entries) {}

  /// e_i in dimension d.
  static FiniteSequence unit(std::size_t d, std::size_t i);
  static FiniteSequence zeros(std::size_t d) { return FiniteSequence(std::vector<double>(d, 0.0)); }

  std::size_t dim() const noexcept { return entries_.size(); }
  double operator[](std::size_t k) const { return entries_[k]; }
  double& operator[](std::size_t k) { return entries_[k]; }
  std::span<const double> entries() const noexcept { return entries_; }
  bool is_zero() const noexcept;
  double max_abs() const noexcept;
  std::size_t support_size() const noexcept;

  FiniteSequence scaled(double c) const;
  bool operator==(const FiniteSequence&) const = default;

 private:
  std::vector<double> entries_;
};

/// Sorted set of distinct 0-based positions.
class IndexSet {
 public:
  IndexSet() = default;
  /// Sorts and validates; duplicates throw DomainError.
  explicit IndexSet(std::vector<std::size_t> indices);
  IndexSet(std::initializer_list<std::size_t> indices) : IndexSet(std::vector<std::size_t>(indices)) {}

  /// {0, ..., n-1}.
  static IndexSet first(std::size_t n);

  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  bool contains(std::size_t k) const noexcept;
  std::span<const std::size_t> indices() const noexcept { return indices_; }
  auto begin() const noexcept { return indices_.begin(); }
  auto end() const noexcept { return indices_.end(); }
  /// Throws DomainError unless every index is < d.
  void require_within(std::size_t d) const;
  bool operator==(const IndexSet&) const = default;

 private:
  std::vector<std::size_t> indices_;
};

}  // namespace orlicz
