#include "voicecmd/types.hpp"

#include "voicecmd/errors.hpp"

namespace voicecmd {

TypeDescriptor TypeDescriptor::integer_number() {
  TypeDescriptor d;
  d.kind_ = Kind::integer_number;
  return d;
}

TypeDescriptor TypeDescriptor::real_number() {
  TypeDescriptor d;
  d.kind_ = Kind::real_number;
  return d;
}

TypeDescriptor TypeDescriptor::enumeration(std::vector<std::string> constants) {
  if (constants.empty())
    throw InvalidSpecError("enumeration must declare at least one constant");
  TypeDescriptor d;
  d.kind_ = Kind::enumeration;
  d.constants_.reserve(constants.size());
  for (std::string& name : constants) {
    EnumConstant c;
    c.words = split_identifier(name);
    if (c.words.empty())
      throw InvalidSpecError("enumeration constant has no word form: " + name);
    c.name = std::move(name);
    d.constants_.push_back(std::move(c));
  }
  return d;
}

TypeDescriptor TypeDescriptor::bounded_string(ValueProvider provider) {
  if (!provider) throw InvalidSpecError("bounded_string requires a value provider");
  TypeDescriptor d;
  d.kind_ = Kind::bounded_string;
  d.provider_ = std::move(provider);
  return d;
}

TypeDescriptor TypeDescriptor::mapped_object(TokenMapper mapper) {
  if (!mapper) throw InvalidSpecError("mapped_object requires a token mapper");
  TypeDescriptor d;
  d.kind_ = Kind::mapped_object;
  d.mapper_ = std::move(mapper);
  return d;
}

TypeDescriptor TypeDescriptor::collection_of(TypeDescriptor element, bool allow_ranges) {
  if (element.kind_ == Kind::collection)
    throw InvalidSpecError("collection elements must not be collections");
  if (allow_ranges && element.kind_ != Kind::integer_number)
    throw InvalidSpecError("ranges are only supported for integer collections");
  TypeDescriptor d;
  d.kind_ = Kind::collection;
  d.element_ = std::make_shared<const TypeDescriptor>(std::move(element));
  d.allow_ranges_ = allow_ranges;
  return d;
}

bool TypeDescriptor::enumerable() const {
  switch (kind_) {
    case Kind::enumeration:
    case Kind::bounded_string:
    case Kind::mapped_object:
      return true;
    default:
      return false;
  }
}

std::string TypeDescriptor::display_name() const {
  switch (kind_) {
    case Kind::integer_number:
      return "int";
    case Kind::real_number:
      return "real";
    case Kind::enumeration:
      return "enum";
    case Kind::bounded_string:
      return "string";
    case Kind::mapped_object:
      return "mapped";
    case Kind::collection:
      return "collection<" + element_->display_name() + ">";
  }
  return "?";
}

}  // namespace voicecmd
