#include "fitt/name.hpp"

#include <algorithm>

namespace fitt {

Name::Name(std::initializer_list<std::string> components)
{
  for (const auto& c : components) {
    append(c);
  }
}

Name::Name(std::vector<std::string> components)
  : m_components(std::move(components))
{
  std::for_each(m_components.begin(), m_components.end(), &Name::checkComponent);
}

void
Name::checkComponent(const std::string& component)
{
  if (component.empty()) {
    throw Error("empty name component");
  }
  if (component.find('/') != std::string::npos) {
    throw Error("name component '" + component + "' contains '/'");
  }
}

Name
Name::parse(std::string_view text)
{
  if (text.empty() || text.front() != '/') {
    throw Error("name '" + std::string(text) + "' must start with '/'");
  }
  Name name;
  if (text.size() == 1) {
    return name;
  }

  size_t pos = 1;
  while (true) {
    size_t next = text.find('/', pos);
    auto component = text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
    if (component.empty()) {
      throw Error("name '" + std::string(text) + "' has an empty component");
    }
    name.m_components.emplace_back(component);
    if (next == std::string_view::npos) {
      break;
    }
    pos = next + 1;
  }
  return name;
}

std::string
Name::toUri() const
{
  if (m_components.empty()) {
    return "/";
  }
  std::string uri;
  for (const auto& c : m_components) {
    uri += '/';
    uri += c;
  }
  return uri;
}

Name&
Name::append(std::string component)
{
  checkComponent(component);
  m_components.push_back(std::move(component));
  return *this;
}

Name
Name::getPrefix(size_t n) const
{
  Name prefix;
  n = std::min(n, m_components.size());
  prefix.m_components.assign(m_components.begin(), m_components.begin() + n);
  return prefix;
}

bool
Name::isPrefixOf(const Name& other) const
{
  if (m_components.size() > other.m_components.size()) {
    return false;
  }
  return std::equal(m_components.begin(), m_components.end(), other.m_components.begin());
}

std::ostream&
operator<<(std::ostream& os, const Name& name)
{
  return os << name.toUri();
}

} // namespace fitt

size_t
std::hash<fitt::Name>::operator()(const fitt::Name& name) const noexcept
{
  size_t seed = name.size();
  std::hash<std::string> h;
  for (const auto& c : name.components()) {
    seed ^= h(c) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  }
  return seed;
}
