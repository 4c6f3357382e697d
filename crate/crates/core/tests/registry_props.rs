use qsix_core::registry::{self, list_identities, Selection};
use qsix_core::{Expected, Status};

#[test]
fn ids_are_unique_and_sorted() {
    let ids: Vec<_> = list_identities().iter().map(|d| d.id).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(ids, sorted);
}

#[test]
fn reruns_are_deterministic() {
    let sel = Selection::Ids(vec!["misprint-6.44".into(), "errata-2.15-x5".into(), "classic-1.6".into()]);
    let a = registry::run(&sel, Some(6), Some(1)).unwrap();
    let b = registry::run(&sel, Some(6), Some(1)).unwrap();
    for (x, y) in a.reports().zip(b.reports()) {
        assert!(x.same_outcome(y), "{}", x.id);
    }
}

#[test]
fn small_orders_keep_their_outcome() {
    // Lowering the order never turns a pass into a fail.
    for d in list_identities() {
        if d.expected != Expected::Pass {
            continue;
        }
        let low = d.default_order.min(4);
        let r = d.run(low);
        assert_eq!(r.status, Status::Pass, "{} at order {low}: {:?}", d.id, r.first_discrepancy);
    }
}

#[test]
fn unknown_id_is_rejected() {
    assert!(registry::run(&Selection::Ids(vec!["no-such-id".into()]), None, None).is_err());
    assert!(registry::run(&Selection::All, Some(2), Some(0)).is_err());
}
