package org.fixture.replication;

public class S3Replicator extends BaseReplicator {
    private final S3Client client;

    public S3Replicator(S3Client client) {
        this.client = client;
    }

    @Override
    public void replicate(String key, byte[] payload) {
        client.putObject(key, payload);
        LOG.info("Replication finished for object {}", key);
    }
}
