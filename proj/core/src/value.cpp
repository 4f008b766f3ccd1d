#include "voicecmd/value.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace voicecmd {

CollectionValue CollectionValue::list(std::vector<Value> items) {
  CollectionValue c;
  c.kind_ = Kind::explicit_list;
  c.items_ = std::move(items);
  return c;
}

CollectionValue CollectionValue::range(std::int64_t low, std::int64_t high) {
  CollectionValue c;
  c.kind_ = Kind::integer_range;
  c.low_ = low;
  c.high_ = high;
  return c;
}

CollectionValue CollectionValue::all() {
  CollectionValue c;
  c.kind_ = Kind::all_values;
  return c;
}

const std::vector<Value>& CollectionValue::items() const {
  if (kind_ != Kind::explicit_list)
    throw std::logic_error("CollectionValue::items() on a non-list collection");
  return items_;
}

std::uint64_t CollectionValue::size() const {
  switch (kind_) {
    case Kind::explicit_list:
      return items_.size();
    case Kind::integer_range:
      return low_ > high_ ? 0 : static_cast<std::uint64_t>(high_ - low_) + 1;
    case Kind::all_values:
      throw std::logic_error("all_values collection not expanded yet");
  }
  return 0;
}

void CollectionValue::for_each(const std::function<void(const Value&)>& fn) const {
  switch (kind_) {
    case Kind::explicit_list:
      for (const Value& v : items_) fn(v);
      return;
    case Kind::integer_range:
      for (std::int64_t i = low_; i <= high_; ++i) fn(Value::integer(i));
      return;
    case Kind::all_values:
      throw std::logic_error("all_values collection not expanded yet");
  }
}

bool CollectionValue::operator==(const CollectionValue& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::explicit_list:
      return items_ == other.items_;
    case Kind::integer_range:
      return low_ == other.low_ && high_ == other.high_;
    case Kind::all_values:
      return true;
  }
  return false;
}

Value Value::integer(std::int64_t v) {
  Value out;
  out.kind_ = Kind::integer;
  out.int_ = v;
  return out;
}

Value Value::real(double v) {
  Value out;
  out.kind_ = Kind::real;
  out.real_ = v;
  return out;
}

Value Value::enum_constant(std::string name) {
  Value out;
  out.kind_ = Kind::enum_constant;
  out.text_ = std::move(name);
  return out;
}

Value Value::text(std::string s) {
  Value out;
  out.kind_ = Kind::text;
  out.text_ = std::move(s);
  return out;
}

Value Value::mapped(std::string key, std::any object) {
  Value out;
  out.kind_ = Kind::mapped;
  out.text_ = std::move(key);
  out.object_ = std::move(object);
  return out;
}

Value Value::collection(CollectionValue c) {
  Value out;
  out.kind_ = Kind::collection;
  out.collection_ = std::make_shared<const CollectionValue>(std::move(c));
  return out;
}

std::string Value::to_display_string() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::none:
      os << "_";
      break;
    case Kind::integer:
      os << int_;
      break;
    case Kind::real: {
      double v = real_;
      if (v == std::floor(v) && std::abs(v) < 1e15) {
        os << static_cast<std::int64_t>(v);
      } else {
        os << v;
      }
      break;
    }
    case Kind::enum_constant:
    case Kind::mapped:
      os << text_;
      break;
    case Kind::text:
      os << '"' << text_ << '"';
      break;
    case Kind::collection: {
      const CollectionValue& c = *collection_;
      switch (c.kind()) {
        case CollectionValue::Kind::explicit_list: {
          os << '[';
          bool first = true;
          for (const Value& v : c.items()) {
            if (!first) os << ", ";
            first = false;
            os << v.to_display_string();
          }
          os << ']';
          break;
        }
        case CollectionValue::Kind::integer_range:
          os << '[' << c.low() << ".." << c.high() << ']';
          break;
        case CollectionValue::Kind::all_values:
          os << "[all]";
          break;
      }
      break;
    }
  }
  return os.str();
}

bool Value::operator==(const Value& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::none:
      return true;
    case Kind::integer:
      return int_ == other.int_;
    case Kind::real:
      return real_ == other.real_;
    case Kind::enum_constant:
    case Kind::text:
    case Kind::mapped:
      return text_ == other.text_;
    case Kind::collection:
      return *collection_ == *other.collection_;
  }
  return false;
}

}  // namespace voicecmd
