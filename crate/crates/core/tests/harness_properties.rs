use fracfactor::harness::{
    oracle_equivalence_campaign, spectral_threshold_scan, CampaignConfig, CaseRecord, GraphSource,
    IntRange, Report, Sampler, ScanConfig, Status,
};
use fracfactor::spectral::MatrixKind;
use fracfactor::FactorBounds;
use proptest::prelude::*;
use serde_json::Value;

fn status() -> impl Strategy<Value = Status> {
    prop_oneof![
        Just(Status::Pass),
        Just(Status::Fail),
        Just(Status::OutOfHypothesis),
        Just(Status::NearTie)
    ]
}

proptest! {
    #[test]
    fn summary_partitions_records(statuses in proptest::collection::vec(status(), 0..60)) {
        let records = statuses
            .iter()
            .enumerate()
            .map(|(i, &s)| {
                let mut r = CaseRecord::new(i as u64);
                r.status = s;
                r
            })
            .collect();
        let rep = Report::new("p", records);
        let s = rep.summary();
        prop_assert_eq!(s.total as usize, statuses.len());
        prop_assert_eq!(s.pass + s.fail + s.out_of_hypothesis + s.near_tie, s.total);
        prop_assert_eq!(s.fail as usize, statuses.iter().filter(|&&x| x == Status::Fail).count());
        prop_assert_eq!(rep.has_failures(), s.fail > 0);

        let text = rep.to_jsonl();
        let last: Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
        prop_assert_eq!(&last["summary"]["counts"]["total"], &Value::from(s.total));
        prop_assert_eq!(text.lines().count(), statuses.len() + 1);
    }

    #[test]
    fn ranges_must_be_nonempty(lo in 0usize..50, hi in 0usize..50) {
        prop_assert_eq!(IntRange::new(lo, hi).is_ok(), lo <= hi);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn oracle_campaign_is_seed_deterministic_and_worker_invariant(seed in any::<u64>(), workers in 2usize..5) {
        let mut c = CampaignConfig::new(GraphSource::Random {
            sampler: Sampler::Gnp { n: IntRange::new(2, 6).unwrap(), p_min: 0.3, p_max: 1.0 },
            count: 12,
        });
        c.seed = seed;
        c.pairs = vec![FactorBounds::new(1, 2).unwrap(), FactorBounds::new(2, 2).unwrap()];
        let once = oracle_equivalence_campaign(&c).unwrap().to_jsonl();
        prop_assert_eq!(&once, &oracle_equivalence_campaign(&c).unwrap().to_jsonl());
        c.worker_count = workers;
        prop_assert_eq!(&once, &oracle_equivalence_campaign(&c).unwrap().to_jsonl());
    }

    #[test]
    fn scans_are_seed_deterministic_and_worker_invariant(seed in any::<u64>(), workers in 2usize..5) {
        let mut c = ScanConfig::new(16, FactorBounds::new(2, 2).unwrap(), MatrixKind::Adjacency);
        c.samples = 60;
        c.seed = seed;
        c.sampler = Sampler::NearExtremal { n: 16, a: 2, max_added: 2, max_removed: 2 };
        let once = spectral_threshold_scan(&c).unwrap();
        prop_assert!(!once.has_failures());
        let text = once.to_jsonl();
        c.worker_count = workers;
        prop_assert_eq!(text, spectral_threshold_scan(&c).unwrap().to_jsonl());
    }
}

#[test]
fn invalid_configs_are_rejected() {
    let mut c = CampaignConfig::new(GraphSource::Enumerated { n_max: 3 });
    c.tol = -1.0;
    assert!(oracle_equivalence_campaign(&c).is_err());
    c.tol = 1e-9;
    c.worker_count = 0;
    assert!(oracle_equivalence_campaign(&c).is_err());
    let mut s = ScanConfig::new(16, FactorBounds::new(2, 2).unwrap(), MatrixKind::Adjacency);
    s.sampler = Sampler::Dense {
        n: 15,
        max_removed: 2,
    };
    assert!(spectral_threshold_scan(&s).is_err());
}
