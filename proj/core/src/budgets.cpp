#include "lklab/budgets.hpp"

#include <cstdlib>
#include <string>

#include "lklab/errors.hpp"

namespace lklab {

Budgets Budgets::from_env()
{
    Budgets b;
    const char* raw = std::getenv("LKLAB_BUDGET");
    if (!raw)
        return b;
    std::string text(raw);
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw InvalidParameters("LKLAB_BUDGET entries must look like key=value: " + item);
        std::string key = item.substr(0, eq);
        int value = 0;
        try {
            value = std::stoi(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw InvalidParameters("LKLAB_BUDGET value is not an integer: " + item);
        }
        if (value < 0)
            throw InvalidParameters("LKLAB_BUDGET values must be >= 0");
        if (key == "alpha")
            b.alpha_vertices = value;
        else if (key == "enum")
            b.enum_vertices = value;
        else if (key == "chi")
            b.chi_vertices = value;
        else if (key == "psi")
            b.psi_vertices = value;
        else if (key == "hom_domain")
            b.hom_domain_vertices = value;
        else if (key == "hom_codomain")
            b.hom_codomain_vertices = value;
        else if (key == "nu")
            b.nu_domain_vertices = value;
        else
            throw InvalidParameters("LKLAB_BUDGET: unknown key '" + key + "'");
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return b;
}

} // namespace lklab
