#pragma once

#include <any>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace voicecmd {

class Value;

/// A collection argument: an explicit value list, a lazy inclusive integer
/// range, or the "all values" marker expanded at invocation time.
class CollectionValue {
 public:
  enum class Kind { explicit_list, integer_range, all_values };

  static CollectionValue list(std::vector<Value> items);
  static CollectionValue range(std::int64_t low, std::int64_t high);
  static CollectionValue all();

  Kind kind() const { return kind_; }
  const std::vector<Value>& items() const;
  std::int64_t low() const { return low_; }
  std::int64_t high() const { return high_; }

  /// Element count; ranges report high-low+1 without materializing.
  std::uint64_t size() const;

  /// Visits every element. Ranges generate values lazily; the all_values
  /// marker cannot be iterated until the engine has expanded it.
  void for_each(const std::function<void(const Value&)>& fn) const;

  bool operator==(const CollectionValue& other) const;

 private:
  Kind kind_ = Kind::explicit_list;
  std::vector<Value> items_;
  std::int64_t low_ = 0;
  std::int64_t high_ = -1;
};

/// A typed argument value passed to command handlers.
class Value {
 public:
  enum class Kind { none, integer, real, enum_constant, text, mapped, collection };

  Value() = default;

  static Value none() { return Value(); }
  static Value integer(std::int64_t v);
  static Value real(double v);
  static Value enum_constant(std::string name);
  static Value text(std::string s);
  static Value mapped(std::string key, std::any object);
  static Value collection(CollectionValue c);

  Kind kind() const { return kind_; }
  std::int64_t as_integer() const { return int_; }
  double as_real() const { return kind_ == Kind::integer ? static_cast<double>(int_) : real_; }
  /// Enum constant name, text content, or mapped surface key.
  const std::string& as_text() const { return text_; }
  const std::any& object() const { return object_; }
  const CollectionValue& as_collection() const { return *collection_; }

  /// Human-readable rendering used by the REPL and reports.
  std::string to_display_string() const;

  bool operator==(const Value& other) const;

 private:
  Kind kind_ = Kind::none;
  std::int64_t int_ = 0;
  double real_ = 0.0;
  std::string text_;
  std::any object_;
  std::shared_ptr<const CollectionValue> collection_;
};

}  // namespace voicecmd
