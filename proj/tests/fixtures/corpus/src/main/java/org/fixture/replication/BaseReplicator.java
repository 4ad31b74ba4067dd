package org.fixture.replication;

import org.slf4j.Logger;
import org.slf4j.LoggerFactory;

public class BaseReplicator {
    protected static final Logger LOG = LoggerFactory.getLogger(BaseReplicator.class);

    public void replicate(String key, byte[] payload) {
        store(key, payload);
        LOG.info("Replication finished for object {}", key);
    }

    protected void store(String key, byte[] payload) {
    }
}
