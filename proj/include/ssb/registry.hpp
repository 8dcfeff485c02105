#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ssb/key.hpp"

namespace ssb {

struct Contact {
    std::string name;  // non-empty
    std::optional<std::string> phone;
    std::optional<std::string> email;
    std::optional<std::string> address;

    bool operator==(const Contact&) const = default;
};

/// Yellow-page classification entry. Matching compares (tmodel_key,
/// key_value); key_name is documentation only.
struct KeyedReference {
    Key tmodel_key;
    std::string key_name;
    std::string key_value;  // non-empty

    bool operator==(const KeyedReference&) const = default;
};

struct BusinessEntity {
    Key business_key;
    std::string name;  // non-empty
    std::string description;
    std::vector<Contact> contacts;
    std::vector<KeyedReference> identifiers;
    std::vector<KeyedReference> categories;

    bool operator==(const BusinessEntity&) const = default;
};

struct BusinessService {
    Key service_key;
    Key business_key;  // owner
    std::string name;
    std::string description;
    std::vector<KeyedReference> categories;

    bool operator==(const BusinessService&) const = default;
};

struct BindingTemplate {
    Key binding_key;
    Key service_key;  // owner
    std::string access_point;
    std::vector<Key> tmodel_keys;

    bool operator==(const BindingTemplate&) const = default;
};

struct TModel {
    Key tmodel_key;
    std::string name;  // non-empty
    std::string description;
    std::optional<std::string> overview_url;

    bool operator==(const TModel&) const = default;
};

struct ServiceRequirements {
    std::vector<KeyedReference> categories;
    std::vector<std::string> keywords;
    std::vector<Key> required_tmodels;

    bool empty() const {
        return categories.empty() && keywords.empty() && required_tmodels.empty();
    }
    bool operator==(const ServiceRequirements&) const = default;
};

struct ServiceMatch {
    BusinessService service;
    Key provider_key;  // equals service.business_key

    bool operator==(const ServiceMatch&) const = default;
};

/// UDDI-style record store: white pages (BusinessEntity), yellow pages
/// (KeyedReference categorizations), green pages (BindingTemplate + TModel).
///
/// Every mutation validates referential integrity before touching state, so
/// a rejected call leaves the store unchanged. No update/delete in v1;
/// re-registering an existing key is DuplicateKey.
///
/// Thread contract: single writer, any number of concurrent readers.
/// Serialization is the caller's job (see BrokerServer).
class RegistryStore {
public:
    Key register_business(BusinessEntity entity);
    Key publish_service(BusinessService service);
    Key publish_binding(BindingTemplate binding);
    Key register_tmodel(TModel tmodel);

    /// Yellow/green-page search. A service matches when every requested
    /// category appears among its own or its owner's categories, every
    /// keyword is a case-insensitive substring of its name or description,
    /// and every required tModel is referenced by at least one of its
    /// bindings. Empty requirement lists are vacuously satisfied.
    /// Result is ordered by (provider_key, service_key).
    std::vector<ServiceMatch> find_services(const ServiceRequirements& req) const;

    const BusinessEntity& get_business_detail(const Key& key) const;

    bool has_business(const Key& key) const { return businesses_.contains(key); }
    bool has_service(const Key& key) const { return services_.contains(key); }
    bool has_tmodel(const Key& key) const { return tmodels_.contains(key); }

    const BusinessService& get_service(const Key& key) const;
    const TModel& get_tmodel(const Key& key) const;

    /// Bindings owned by a service, ordered by binding key.
    std::vector<BindingTemplate> bindings_of(const Key& service_key) const;
    /// Services owned by a business, ordered by service key.
    std::vector<BusinessService> services_of(const Key& business_key) const;

    const std::map<Key, BusinessEntity>& businesses() const { return businesses_; }
    const std::map<Key, BusinessService>& services() const { return services_; }
    const std::map<Key, BindingTemplate>& bindings() const { return bindings_; }
    const std::map<Key, TModel>& tmodels() const { return tmodels_; }

private:
    std::map<Key, BusinessEntity> businesses_;
    std::map<Key, BusinessService> services_;
    std::map<Key, BindingTemplate> bindings_;
    std::map<Key, TModel> tmodels_;
};

}  // namespace ssb
