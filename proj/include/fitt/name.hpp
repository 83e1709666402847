#ifndef FITT_NAME_HPP
#define FITT_NAME_HPP

#include "fitt/common.hpp"

#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace fitt {

/**
 * \brief An NDN name: an ordered list of non-empty text components.
 *
 * The canonical text form is "/" followed by the components joined with "/".
 * The empty name renders as "/" and is a prefix of every name.
 */
class Name
{
public:
  class Error : public fitt::Error
  {
  public:
    using fitt::Error::Error;
  };

  Name() = default;

  Name(std::initializer_list<std::string> components);

  explicit
  Name(std::vector<std::string> components);

  /// Parses the canonical text form; throws Name::Error on malformed input.
  static Name
  parse(std::string_view text);

  std::string
  toUri() const;

  size_t
  size() const
  {
    return m_components.size();
  }

  bool
  empty() const
  {
    return m_components.empty();
  }

  const std::string&
  get(size_t i) const
  {
    return m_components.at(i);
  }

  const std::vector<std::string>&
  components() const
  {
    return m_components;
  }

  /// Appends one component; throws Name::Error if it is empty or contains '/'.
  Name&
  append(std::string component);

  /// Returns the first \p n components.
  Name
  getPrefix(size_t n) const;

  bool
  isPrefixOf(const Name& other) const;

  friend bool
  operator==(const Name&, const Name&) = default;

  friend auto
  operator<=>(const Name&, const Name&) = default;

private:
  static void
  checkComponent(const std::string& component);

private:
  std::vector<std::string> m_components;
};

std::ostream&
operator<<(std::ostream& os, const Name& name);

} // namespace fitt

template<>
struct std::hash<fitt::Name>
{
  size_t
  operator()(const fitt::Name& name) const noexcept;
};

#endif // FITT_NAME_HPP
