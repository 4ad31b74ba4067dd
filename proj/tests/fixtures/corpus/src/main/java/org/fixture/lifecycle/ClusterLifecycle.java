package org.fixture.lifecycle;

import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

public class ClusterLifecycle {
    private static final Logger LOG = LoggerFactory.getLogger(ClusterLifecycle.class);

    private final Registry registry = new Registry();

    public void stop() {
        LOG.info("Shutting down services");
        registry.clear();
    }
}
