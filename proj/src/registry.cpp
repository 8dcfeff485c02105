#include "ssb/registry.hpp"

#include <algorithm>
#include <cctype>

#include "ssb/error.hpp"

namespace ssb {

namespace {

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

bool contains_ci(std::string_view haystack, std::string_view needle) {
    return to_lower(haystack).find(to_lower(needle)) != std::string::npos;
}

bool has_category(const std::vector<KeyedReference>& cats, const KeyedReference& want) {
    return std::any_of(cats.begin(), cats.end(), [&](const KeyedReference& c) {
        return c.tmodel_key == want.tmodel_key && c.key_value == want.key_value;
    });
}

void validate_keyed_references(const std::vector<KeyedReference>& refs, const char* what) {
    for (const auto& r : refs) {
        if (r.key_value.empty()) {
            throw Error(ErrorCode::ValidationError,
                        std::string(what) + " keyed reference has an empty key_value");
        }
    }
}

}  // namespace

Key RegistryStore::register_business(BusinessEntity entity) {
    if (entity.name.empty()) {
        throw Error(ErrorCode::ValidationError, "business name must be non-empty");
    }
    for (const auto& c : entity.contacts) {
        if (c.name.empty()) {
            throw Error(ErrorCode::ValidationError, "contact name must be non-empty");
        }
    }
    validate_keyed_references(entity.identifiers, "identifier");
    validate_keyed_references(entity.categories, "category");
    if (businesses_.contains(entity.business_key)) {
        throw Error(ErrorCode::DuplicateKey,
                    "business key already registered: " + entity.business_key.str());
    }
    Key key = entity.business_key;
    businesses_.emplace(key, std::move(entity));
    return key;
}

Key RegistryStore::publish_service(BusinessService service) {
    if (!businesses_.contains(service.business_key)) {
        throw Error(ErrorCode::UnknownBusiness,
                    "service owner not registered: " + service.business_key.str());
    }
    validate_keyed_references(service.categories, "category");
    if (services_.contains(service.service_key)) {
        throw Error(ErrorCode::DuplicateKey,
                    "service key already published: " + service.service_key.str());
    }
    Key key = service.service_key;
    services_.emplace(key, std::move(service));
    return key;
}

Key RegistryStore::publish_binding(BindingTemplate binding) {
    if (!services_.contains(binding.service_key)) {
        throw Error(ErrorCode::UnknownService,
                    "binding owner not published: " + binding.service_key.str());
    }
    for (const auto& t : binding.tmodel_keys) {
        if (!tmodels_.contains(t)) {
            throw Error(ErrorCode::UnknownTModel,
                        "binding references unregistered tModel: " + t.str());
        }
    }
    if (bindings_.contains(binding.binding_key)) {
        throw Error(ErrorCode::DuplicateKey,
                    "binding key already published: " + binding.binding_key.str());
    }
    Key key = binding.binding_key;
    bindings_.emplace(key, std::move(binding));
    return key;
}

Key RegistryStore::register_tmodel(TModel tmodel) {
    if (tmodel.name.empty()) {
        throw Error(ErrorCode::ValidationError, "tModel name must be non-empty");
    }
    if (tmodels_.contains(tmodel.tmodel_key)) {
        throw Error(ErrorCode::DuplicateKey,
                    "tModel key already registered: " + tmodel.tmodel_key.str());
    }
    Key key = tmodel.tmodel_key;
    tmodels_.emplace(key, std::move(tmodel));
    return key;
}

std::vector<ServiceMatch> RegistryStore::find_services(const ServiceRequirements& req) const {
    std::vector<ServiceMatch> out;
    for (const auto& [skey, service] : services_) {
        const BusinessEntity& owner = businesses_.at(service.business_key);

        bool ok = std::all_of(req.categories.begin(), req.categories.end(),
                              [&](const KeyedReference& want) {
                                  return has_category(service.categories, want) ||
                                         has_category(owner.categories, want);
                              });
        if (!ok) continue;

        ok = std::all_of(req.keywords.begin(), req.keywords.end(), [&](const std::string& kw) {
            return contains_ci(service.name, kw) || contains_ci(service.description, kw);
        });
        if (!ok) continue;

        if (!req.required_tmodels.empty()) {
            auto svc_bindings = bindings_of(skey);
            ok = std::all_of(req.required_tmodels.begin(), req.required_tmodels.end(),
                             [&](const Key& want) {
                                 return std::any_of(
                                     svc_bindings.begin(), svc_bindings.end(),
                                     [&](const BindingTemplate& b) {
                                         return std::find(b.tmodel_keys.begin(),
                                                          b.tmodel_keys.end(),
                                                          want) != b.tmodel_keys.end();
                                     });
                             });
            if (!ok) continue;
        }

        out.push_back(ServiceMatch{service, service.business_key});
    }
    std::sort(out.begin(), out.end(), [](const ServiceMatch& a, const ServiceMatch& b) {
        if (a.provider_key != b.provider_key) return a.provider_key < b.provider_key;
        return a.service.service_key < b.service.service_key;
    });
    return out;
}

const BusinessEntity& RegistryStore::get_business_detail(const Key& key) const {
    auto it = businesses_.find(key);
    if (it == businesses_.end()) {
        throw Error(ErrorCode::UnknownBusiness, "no business with key " + key.str());
    }
    return it->second;
}

const BusinessService& RegistryStore::get_service(const Key& key) const {
    auto it = services_.find(key);
    if (it == services_.end()) {
        throw Error(ErrorCode::UnknownService, "no service with key " + key.str());
    }
    return it->second;
}

const TModel& RegistryStore::get_tmodel(const Key& key) const {
    auto it = tmodels_.find(key);
    if (it == tmodels_.end()) {
        throw Error(ErrorCode::UnknownTModel, "no tModel with key " + key.str());
    }
    return it->second;
}

std::vector<BindingTemplate> RegistryStore::bindings_of(const Key& service_key) const {
    std::vector<BindingTemplate> out;
    for (const auto& [bkey, binding] : bindings_) {
        if (binding.service_key == service_key) out.push_back(binding);
    }
    return out;
}

std::vector<BusinessService> RegistryStore::services_of(const Key& business_key) const {
    std::vector<BusinessService> out;
    for (const auto& [skey, service] : services_) {
        if (service.business_key == business_key) out.push_back(service);
    }
    return out;
}

}  // namespace ssb
