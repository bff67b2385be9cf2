from . import monomial_adapter, polytope_adapter, tableaux_adapter

adapter_routers = {
    "polytope": polytope_adapter.PolytopeComponentFactory,
    "tableaux": tableaux_adapter.TableauComponentFactory,
    "monomials": monomial_adapter.MonomialComponentFactory,
}
